"""Verification suites: each re-checks a family of claims at a given n.

A suite is a function ``(n, options) -> list[Claim]``.  Exhaustive checks
over Sym_n switch to seeded random samples above ``exhaustive_max_n``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import aut
from .cuts import (
    CutPoints,
    PartitionClass,
    as_permutation,
    as_permutation_pointwise,
    beta,
    class_sizes,
    classify,
    cuts_from_permutation,
    enumerate_tn,
    invert_cuts,
    power_cuts,
    tn_size,
)
from .graphs import (
    BoundError,
    build_bt_graph,
    build_btv_graph,
    common_neighbors,
    degree_report,
    expected_em_edges,
    hamiltonian_cycle_V,
    is_bt_edge,
    is_clique,
    maximal_two_cliques,
    validate_cycle,
    vertex_set_V,
    vertices_of_class,
    bipartite_degrees,
)
from .perm import Permutation, all_perms, compose, identity_perm, inverse
from .report import Claim
from .toric import (
    ToricReverseElement,
    act_on_cuts,
    act_on_cuts_via_perm,
    dihedral_compose,
    dihedral_group,
    reverse_map,
    reverse_map_pointwise,
    toric_class,
    toric_map,
    toric_map_right,
    toric_map_shifted,
)


@dataclass
class Options:
    exhaustive_max_n: int = 5
    samples: int = 10_000
    seed: int = 0
    threads: int = 1
    max_cayley_n: int | None = None


def _perms(n: int, opts: Options, seed_offset: int = 0) -> Iterator[Permutation]:
    if n <= opts.exhaustive_max_n:
        yield from all_perms(n)
        return
    rng = random.Random(opts.seed + seed_offset)
    base = list(range(1, n + 1))
    for _ in range(opts.samples):
        rng.shuffle(base)
        yield Permutation._trusted(tuple(base))


def _pairs(n: int, opts: Options) -> Iterator[tuple[Permutation, Permutation]]:
    if n <= opts.exhaustive_max_n:
        perms = list(all_perms(n))
        yield from itertools.product(perms, perms)
        return
    yield from zip(_perms(n, opts, 1), _perms(n, opts, 2))


def _scope(n: int, opts: Options) -> str:
    return "all of Sym_n" if n <= opts.exhaustive_max_n else f"{opts.samples} samples"


# -- partition ------------------------------------------------------------------


def suite_partition(n: int, opts: Options) -> list[Claim]:
    tn = enumerate_tn(n)
    sizes = class_sizes(n)
    perms = [as_permutation(c) for c in tn]
    b = as_permutation(beta(n))
    powers, cur = [], b
    for _ in range(n - 1):
        powers.append(cur)
        cur = compose(cur, b)
    claims = [
        Claim(f"|T_{n}| = n(n+1)(n-1)/6", n * (n + 1) * (n - 1) // 6, len(tn)),
        Claim("enumeration has no duplicates", len(tn), len(set(tn))),
        Claim("|B| = n-1", n - 1, sizes[PartitionClass.B]),
        Claim("|L| = (n-1)(n-2)/2", (n - 1) * (n - 2) // 2, sizes[PartitionClass.L]),
        Claim("|F| = (n-1)(n-2)/2", (n - 1) * (n - 2) // 2, sizes[PartitionClass.F]),
        Claim("|S| = (n-1)(n-2)(n-3)/6", (n - 1) * (n - 2) * (n - 3) // 6, sizes[PartitionClass.S]),
        Claim("block form equals pointwise form on T_n", True,
              all(as_permutation_pointwise(c) == p for c, p in zip(tn, perms))),
        Claim("as_permutation is injective on T_n", len(tn), len(set(perms))),
        Claim("cut points decode back from every element of T_n", True,
              all(cuts_from_permutation(p) == c for c, p in zip(tn, perms))),
        Claim("inverse of sigma(i,j,k) is sigma(i,k-j+i,k)", True,
              all(inverse(p) == as_permutation(invert_cuts(c)) for c, p in zip(tn, perms))),
        Claim("sigma(i,i+1,k)^(j-i) = sigma(i,j,k)", True, all(
            _power(as_permutation(CutPoints(n, c.i, c.i + 1, c.k)), c.j - c.i)
            == as_permutation(power_cuts(n, c.i, c.k, c.j - c.i)) for c in tn)),
        Claim("order of beta = sigma(0,1,n)", n, _order(b)),
        Claim("B is the set of nontrivial powers of beta", True,
              {cuts_from_permutation(p) for p in powers}
              == {c for c in tn if classify(c) is PartitionClass.B}),
    ]
    if n <= 7:
        members = {p for p in perms}
        decoded_ok = all(
            (cuts_from_permutation(p) is not None) == (p in members) for p in all_perms(n)
        )
        claims.append(Claim("decoder agrees with the T_n hash set on Sym_n", True, decoded_ok))
    return claims


def _power(p: Permutation, e: int) -> Permutation:
    out = identity_perm(p.n)
    for _ in range(e):
        out = compose(out, p)
    return out


def _order(p: Permutation) -> int:
    e, cur, ident = 1, p, identity_perm(p.n)
    while cur != ident:
        cur = compose(cur, p)
        e += 1
    return e


# -- toric ----------------------------------------------------------------------


def _phi_euler(m: int) -> int:
    return sum(1 for a in range(1, m + 1) if math.gcd(a, m) == 1)


def check_toric_algebra(n: int, opts: Options) -> list[Claim]:
    m = n + 1
    rs = range(m)
    shift_form = compose_law = reflect_law = inv_law = g_forms = fbar_law = True
    for p in _perms(n, opts):
        images = [toric_map(p, r) for r in rs]
        gp = reverse_map(p)
        g_forms &= gp == reverse_map_pointwise(p) and reverse_map(gp) == p
        p_inv = inverse(p)
        fbar_law &= toric_map_right(p, 1) == toric_map(p, p_inv(1) % m)
        for r, fr in enumerate(images):
            shift_form &= fr == toric_map_shifted(p, r)
            pr = 0 if r == 0 else p(r)
            inv_law &= inverse(fr) == toric_map(p_inv, pr)
            compose_law &= all(toric_map(fr, s) == images[(r + s) % m] for s in rs)
            reflect_law &= reverse_map(toric_map(gp, r)) == images[(m - r) % m]
    product_rule_f = product_rule_g = True
    for rho, pi in _pairs(n, opts):
        rp = compose(rho, pi)
        product_rule_g &= reverse_map(rp) == compose(reverse_map(rho), reverse_map(pi))
        for r in rs:
            pr = 0 if r == 0 else pi(r)
            product_rule_f &= toric_map(rp, r) == compose(toric_map(rho, pr), toric_map(pi, r))
    scope = _scope(n, opts)
    return [
        Claim(f"index-shift form equals conjugation form of f_r ({scope})", True, shift_form),
        Claim(f"f_s(f_r(p)) = f_(s+r)(p) ({scope})", True, compose_law),
        Claim(f"g f_r g = f_(n+1-r) ({scope})", True, reflect_law),
        Claim(f"f_r(p)^-1 = f_(p_r)(p^-1) ({scope})", True, inv_law),
        Claim(f"g by conjugation equals pointwise g, g an involution ({scope})", True, g_forms),
        Claim(f"fbar(p) = f_(p^-1(1))(p) ({scope})", True, fbar_law),
        Claim(f"f_r(rho pi) = f_(pi_r)(rho) f_r(pi) ({scope} pairs)", True, product_rule_f),
        Claim(f"g(rho pi) = g(rho) g(pi) ({scope} pairs)", True, product_rule_g),
    ]


def check_actions_on_cuts(n: int) -> list[Claim]:
    tn = enumerate_tn(n)
    claims = []
    for conv in ("left", "right"):
        group = dihedral_group(n, conv)
        ok = all(act_on_cuts(e, c) == act_on_cuts_via_perm(e, c) for e in group for c in tn)
        claims.append(Claim(f"closed-form action equals conjugation on T_{n} ({conv})", True, ok))
        probes = [as_permutation(c) for c in tn]
        normal_form = all(
            dihedral_compose(a, b)(p) == a(b(p)) for a in group for b in group for p in probes
        )
        claims.append(Claim(f"dihedral normal form matches composition of maps ({conv})",
                            True, normal_form))
    return claims


def check_toric_classes(n: int, opts: Options) -> list[Claim]:
    sizes_divide = True
    singletons = set()
    for p in all_perms(n) if n <= 7 else _perms(n, opts):
        cls = toric_class(p)
        sizes_divide &= (n + 1) % len(cls) == 0
        if len(cls) == 1:
            singletons.add(p)
    claims = [Claim("every toric class size divides n+1", True, sizes_divide)]
    if n <= 7:
        claims.append(Claim("number of one-element toric classes = phi(n+1)",
                            _phi_euler(n + 1), len(singletons)))
    return claims


def check_fbar_powers_into_S(n: int) -> list[Claim]:
    """Powers of fbar that carry L and B into S (used for the final step of Aut = D)."""
    def fb(c: CutPoints, e: int) -> CutPoints:
        return act_on_cuts(ToricReverseElement(n, e, False, "right"), c)

    s = lambda i, j, k: CutPoints(n, i, j, k)  # noqa: E731
    ok = True
    for j in range(3, n):
        for k in range(j + 1, n + 1):
            ok &= fb(s(0, j, k), 2) == s(j - 2, k - 2, n - 1)
    for k in range(4, n + 1):
        ok &= fb(s(0, 1, k), 3) == s(k - 3, n - 2, n - 1)
    for k in range(5, n + 1):
        ok &= fb(s(0, 2, k), 4) == s(k - 4, n - 3, n - 1)
    if n >= 5:
        ok &= fb(s(0, 1, 2), 4) == s(n - 3, n - 2, n - 1)
        ok &= fb(s(0, 1, 3), 5) == s(n - 4, n - 3, n - 1)
        ok &= fb(s(0, 2, 3), 5) == s(n - 4, n - 2, n - 1)
    if n >= 6:
        ok &= fb(s(0, 2, 4), 6) == s(n - 5, n - 3, n - 1)
    return [Claim("fbar powers carry L and B into S as listed", True, ok)]


def suite_toric(n: int, opts: Options) -> list[Claim]:
    claims = check_toric_algebra(n, opts)
    claims += check_actions_on_cuts(n)
    claims += check_toric_classes(n, opts)
    tn = enumerate_tn(n)
    g = ToricReverseElement(n, 0, True)
    swapped = all(
        classify(act_on_cuts(g, c)) == {PartitionClass.L: PartitionClass.F,
                                        PartitionClass.F: PartitionClass.L}.get(classify(c), classify(c))
        for c in tn
    )
    claims.append(Claim("g swaps L and F and preserves B and S", True, swapped))
    if n >= 5:
        claims += check_fbar_powers_into_S(n)
    return claims


# -- graph structure ------------------------------------------------------------


def suite_regularity(n: int, opts: Options) -> list[Claim]:
    g = build_bt_graph(n)
    # only n = 4 is singled out; 2(n-2) is claimed for n >= 5
    want = 3 if n == 4 else 2 * (n - 2)
    label = "3 (n=4 remark)" if n == 4 else f"2(n-2)={want}"
    return [Claim(f"BTbar_{n} degrees all {label}", {want: len(g.legend)}, degree_report(g))]


def suite_bipartite(n: int, opts: Options) -> list[Claim]:
    g = build_bt_graph(n)
    B = vertices_of_class(g, PartitionClass.B)
    L = vertices_of_class(g, PartitionClass.L)
    F = vertices_of_class(g, PartitionClass.F)
    S = vertices_of_class(g, PartitionClass.S)
    lf_b = bipartite_degrees(g, L + F, B)
    l_f = bipartite_degrees(g, L, F)
    b_s = bipartite_degrees(g, B, S)
    s = lambda i, j, k: as_permutation(CutPoints(n, i, j, k))  # noqa: E731
    ids = True
    for j in range(2, n):
        for i in range(1, j):
            ids &= s(i, j, n) == compose(s(0, j, n), s(0, n - j, n - j + i))
            ids &= s(i, j, n) == compose(s(0, i, j), s(0, j - i, n))
            ids &= s(0, j, n) == compose(s(i, j, n), s(0, i, n - j + i))
    for j in range(1, n):
        for i in range(1, n - j):
            ids &= s(0, j, n) == compose(s(0, j, j + i), s(i, j + i, n))
    return [
        Claim("(L+F, B): every L+F vertex has cross-degree 1", {1: len(L) + len(F)},
              _hist(lf_b[v] for v in L + F)),
        Claim("(L+F, B): every B vertex has cross-degree n-2", {n - 2: len(B)},
              _hist(lf_b[v] for v in B)),
        Claim("(L, F) is (1,1)-biregular", {1: len(L) + len(F)}, _hist(l_f.values())),
        Claim("no B-S edges", 0, sum(b_s.values())),
        Claim("sigma(i,j,n) and sigma(0,j,n) product identities", True, ids),
    ]


def _hist(values: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return dict(sorted(out.items()))


def _edge_set(n: int, pairs) -> set[frozenset]:
    return {frozenset(p) for p in pairs}


def suite_cliques(n: int, opts: Options) -> list[Claim]:
    g = build_bt_graph(n)
    found = maximal_two_cliques(g)
    got = _edge_set(n, ((g.legend[u], g.legend[v]) for u, v in found))
    expected = expected_em_edges(n)
    want = _edge_set(n, (e.endpoints for e in expected))
    endpoints = [c for e in expected for c in e.endpoints]
    B = vertices_of_class(g, PartitionClass.B)
    b_unique = is_clique(g, B) and all(
        common_neighbors(g, u, v) == frozenset(B) - {u, v}
        for u in B for v in B if u < v
    )
    fbar = ToricReverseElement(n, 1, False, "right")
    by_m = {e.m: frozenset(e.endpoints) for e in expected}
    cycles = all(
        frozenset(act_on_cuts(fbar, c) for c in by_m[m]) == by_m[(m - 1) % (n + 1)]
        for m in by_m
    )
    lam_inverse = all(
        inverse(as_permutation(e.endpoints[0])) == as_permutation(e.endpoints[1])
        for e in expected[: n - 2]
    )
    return [
        Claim(f"number of maximal 2-cliques of BTbar_{n} = n+1", n + 1, len(found)),
        Claim("maximal 2-cliques equal the closed-form e_m", True, got == want),
        Claim("e_m are pairwise disjoint", 2 * (n + 1), len(set(endpoints))),
        Claim("endpoints of each e_l in Lambda are mutual inverses", True, lam_inverse),
        Claim("B is the unique maximal (n-1)-clique through any B edge", True, b_unique),
        Claim("fbar sends e_m to e_(m-1 mod n+1)", True, cycles),
    ]


def check_edge_witnesses(n: int) -> list[Claim]:
    """Each parameter family of asserted edges really is an edge of BTbar."""
    tn = enumerate_tn(n)
    ok = True
    count = 0
    for a in tn:
        for b in tn:
            if a == b:
                continue
            cases = (
                (b.i, b.j) == (a.i, a.j),
                (b.i, b.j) == (a.j, a.k) and a.k < b.k,
                (b.j, b.k) == (a.j, a.k),
                (b.j, b.k) == (a.i, a.j) and b.i < a.i,
                (a.i, a.k) == (b.i, b.k) and a.j < b.j,
            )
            if any(cases):
                count += 1
                ok &= is_bt_edge(a, b)
    return [Claim(f"{count} closed-form edge witnesses are edges of BTbar_{n}", True, ok)]


def suite_hamiltonian(n: int, opts: Options) -> list[Claim]:
    v = build_btv_graph(n)
    cycle = hamiltonian_cycle_V(n)
    problems = validate_cycle(v, cycle)
    claims = [
        Claim("|V| = 2(n+1)", 2 * (n + 1), len(vertex_set_V(n))),
        Claim(f"BTbar_{n}(V) degrees all 3", {3: 2 * (n + 1)}, degree_report(v)),
        Claim("constructed cycle is Hamiltonian in BTbar(V)", "no problems",
              "; ".join(problems) or "no problems"),
        Claim("cycle starts at (0,2,3)", "(0,2,3)", str(cycle[0])),
    ]
    if n <= 7:
        claims += check_edge_witnesses(n)
    return claims


def suite_dihedral_regular_on_V(n: int, opts: Options) -> list[Claim]:
    V = set(vertex_set_V(n))
    group = dihedral_group(n, "right")
    start = min(V)
    preserves = all(act_on_cuts(e, c) in V for e in group for c in V)
    orbit = {act_on_cuts(e, start) for e in group}
    stabilizers = [sum(1 for e in group if act_on_cuts(e, c) == c) for c in sorted(V)]
    return [
        Claim("toric-reverse group preserves V", True, preserves),
        Claim("toric-reverse group has order 2(n+1)", 2 * (n + 1), len(set(group))),
        Claim("action on V is transitive", len(V), len(orbit)),
        Claim("point stabilisers on V are trivial", [1] * len(V), stabilizers),
    ]


# -- automorphisms --------------------------------------------------------------


def suite_aut_bt(n: int, opts: Options) -> list[Claim]:
    claims = aut.check_theorem_aut_bt(n, threads=opts.threads)
    if n >= 5:
        g = build_bt_graph(n)
        v = g.index[CutPoints(n, 0, 2, n)]
        stab = aut.stabilizer_fixing(g, [v], threads=opts.threads)
        claims.append(Claim("only the identity fixes sigma(0,2,n)", 1, stab.order))
    return claims


def suite_phi(n: int, opts: Options) -> list[Claim]:
    return aut.phi_check(n, samples=1000, seed=opts.seed)


def suite_n_trivial(n: int, opts: Options) -> list[Claim]:
    bound = opts.max_cayley_n if opts.max_cayley_n is not None else aut.DEFAULT_MAX_N_TRIVIAL
    return aut.check_n_trivial(n, max_n=bound, threads=opts.threads)


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[int, Options], list[Claim]]
    min_n: int
    max_n: int | None = None
    # excluded from "all" unless the bound allows it
    bounded: bool = False


SUITES: dict[str, Suite] = {
    s.name: s for s in (
        Suite("partition", suite_partition, 2),
        Suite("toric", suite_toric, 2),
        Suite("regularity", suite_regularity, 4),
        Suite("bipartite", suite_bipartite, 5),
        Suite("cliques", suite_cliques, 5),
        Suite("hamiltonian", suite_hamiltonian, 5),
        Suite("aut_bt", suite_aut_bt, 4),
        Suite("dihedral_regular_on_V", suite_dihedral_regular_on_V, 5),
        Suite("phi", suite_phi, 2, max_n=6, bounded=True),
        Suite("n_trivial", suite_n_trivial, 3, bounded=True),
    )
}


def suite_names() -> list[str]:
    return list(SUITES) + ["all"]


def _within_bound(suite: Suite, n: int, opts: Options) -> bool:
    if suite.name == "n_trivial":
        bound = opts.max_cayley_n if opts.max_cayley_n is not None else aut.DEFAULT_MAX_N_TRIVIAL
        return n <= bound
    return suite.max_n is None or n <= suite.max_n


def run_suite(name: str, n: int, opts: Options | None = None) -> tuple[list[Claim], list[str]]:
    """Run one suite (or ``all``); returns the claims and notes about skipped suites."""
    opts = opts or Options()
    if name == "all":
        claims: list[Claim] = []
        notes: list[str] = []
        for suite in SUITES.values():
            if n < suite.min_n:
                notes.append(f"skipped {suite.name}: needs n >= {suite.min_n}")
            elif suite.bounded and not _within_bound(suite, n, opts):
                notes.append(f"skipped {suite.name}: n={n} beyond its bound")
            else:
                claims += suite.run(n, opts)
        return claims, notes
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    suite = SUITES[name]
    if n < suite.min_n:
        raise ValueError(f"suite {name} needs n >= {suite.min_n}")
    if not _within_bound(suite, n, opts):
        raise BoundError(f"suite {name} for n={n} exceeds its bound")
    return suite.run(n, opts), []
