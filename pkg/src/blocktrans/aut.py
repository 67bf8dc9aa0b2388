"""Graph automorphism search and the group-theoretic checks built on it.

The engine is individualisation-refinement with full enumeration: a fixed
base path of individualised vertices is chosen on one side, and every
image sequence that survives colour refinement is tried on the other.
Each automorphism corresponds to exactly one surviving leaf, so the group
order is the number of verified leaves.
"""

from __future__ import annotations

import hashlib
import math
import random
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .cuts import CutPoints, as_permutation, enumerate_tn
from .graphs import BoundError, Graph, build_bt_graph, build_cayley
from .perm import (
    Permutation,
    ZeroExtendedPermutation,
    all_perms,
    compose,
    extend_zero,
    identity_perm,
    inverse,
    perm_array,
    rank_rows,
    reverse_perm,
)
from .report import Claim
from .toric import (
    ToricReverseElement,
    act_on_cuts,
    act_on_perm,
    alpha_power,
    dihedral_group,
    reverse_map,
    toric_map,
)

DEFAULT_MAX_VERTICES = 5040
DEFAULT_MAX_N_TRIVIAL = 6


@dataclass(frozen=True, order=True)
class VertexMap:
    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def __mul__(self, other: VertexMap) -> VertexMap:
        # self∘other
        m = self.mapping
        return VertexMap(tuple(m[x] for x in other.mapping))

    def inverse(self) -> VertexMap:
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return VertexMap(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.mapping))

    def is_automorphism(self, g: Graph) -> bool:
        m = self.mapping
        if sorted(m) != list(range(g.vertex_count)):
            return False
        adj = g.adjacency
        return all(
            frozenset(m[w] for w in g.neighbors[v]) == adj[m[v]] for v in range(g.vertex_count)
        )


def identity_map(size: int) -> VertexMap:
    return VertexMap(tuple(range(size)))


@dataclass
class GroupDescription:
    order: int
    generators: list[VertexMap]
    elements: list[VertexMap] = field(repr=False, default_factory=list)
    notes: str = ""


def closure(generators: Iterable[VertexMap], size: int, limit: int | None = None) -> set[VertexMap]:
    """All products of ``generators``; stops early once ``limit`` is exceeded."""
    gens = list(generators)
    start = identity_map(size)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                if limit is not None and len(seen) > limit:
                    return seen
                queue.append(y)
    return seen


def pick_generators(elements: Sequence[VertexMap], key: Callable[[VertexMap], object] | None = None
                    ) -> list[VertexMap]:
    """Greedy generating set: walk the elements in order, keep any not yet generated."""
    if not elements:
        return []
    size = len(elements[0].mapping)
    ordered = sorted(elements, key=key) if key is not None else sorted(elements)
    gens: list[VertexMap] = []
    span = {identity_map(size)}
    for x in ordered:
        if x in span:
            continue
        gens.append(x)
        span = closure(gens, size)
        if len(span) == len(elements):
            break
    return gens


# -- refinement engine ----------------------------------------------------------


class _Refiner:
    """Colour refinement on a padded neighbour matrix.

    A colouring is an int array with labels 0..k-1.  One round recolours
    each vertex by (colour, sorted neighbour colours) and relabels by the
    sorted order of those signatures, so labels are isomorphism invariant.
    """

    def __init__(self, g: Graph) -> None:
        size = g.vertex_count
        width = max((len(nb) for nb in g.neighbors), default=0)
        nbr = np.full((size, max(width, 1)), size, dtype=np.int64)
        for v, nb in enumerate(g.neighbors):
            nbr[v, : len(nb)] = nb
        self.size = size
        self.nbr = nbr
        self.degrees = np.array([len(nb) for nb in g.neighbors], dtype=np.int64)

    def refine(self, colors: np.ndarray) -> tuple[np.ndarray, str]:
        h = hashlib.blake2b(digest_size=16)
        _, colors = np.unique(colors, return_inverse=True)
        colors = colors.astype(np.int64).ravel()
        k = int(colors.max()) + 1 if colors.size else 0
        while True:
            ext = np.append(colors, -1)
            rows = np.column_stack([colors, np.sort(ext[self.nbr], axis=1)])
            uniq, inv, counts = np.unique(rows, axis=0, return_inverse=True, return_counts=True)
            h.update(uniq.tobytes())
            h.update(counts.tobytes())
            inv = inv.astype(np.int64).ravel()
            if len(uniq) == k:
                return inv, h.hexdigest()
            colors, k = inv, len(uniq)

    def is_automorphism(self, mapping: np.ndarray) -> bool:
        ext = np.append(mapping, self.size)
        mapped = np.sort(ext[self.nbr], axis=1)
        target = np.sort(self.nbr[mapping], axis=1)
        return bool(np.array_equal(mapped, target))


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    out = 2 * colors + 1
    out[v] -= 1
    return out


def _target_cell(colors: np.ndarray) -> int | None:
    counts = np.bincount(colors)
    nontrivial = np.nonzero(counts > 1)[0]
    if nontrivial.size == 0:
        return None
    best = nontrivial[np.argmin(counts[nontrivial])]
    return int(best)


def _search(g: Graph, initial: np.ndarray, threads: int = 1) -> list[VertexMap]:
    refiner = _Refiner(g)
    colors, cert = refiner.refine(initial)
    base_colors = [colors]
    base_certs = [cert]
    targets: list[int] = []
    while True:
        t = _target_cell(base_colors[-1])
        if t is None:
            break
        v = int(np.nonzero(base_colors[-1] == t)[0][0])
        targets.append(t)
        c, cert = refiner.refine(_individualize(base_colors[-1], v))
        base_colors.append(c)
        base_certs.append(cert)
    depth = len(targets)
    leaf = base_colors[-1]

    def descend(level: int, colors: np.ndarray) -> list[VertexMap]:
        if level == depth:
            order = np.argsort(colors)
            mapping = order[leaf]
            if refiner.is_automorphism(mapping):
                return [VertexMap(tuple(int(x) for x in mapping))]
            return []
        found = []
        for w in np.nonzero(colors == targets[level])[0]:
            c, cert = refiner.refine(_individualize(colors, int(w)))
            if cert == base_certs[level + 1]:
                found.extend(descend(level + 1, c))
        return found

    if depth == 0:
        return descend(0, base_colors[0])

    candidates = [int(w) for w in np.nonzero(base_colors[0] == targets[0])[0]]

    def branch(w: int) -> list[VertexMap]:
        c, cert = refiner.refine(_individualize(base_colors[0], w))
        return descend(1, c) if cert == base_certs[1] else []

    if threads > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(branch, candidates))
    else:
        parts = [branch(w) for w in candidates]
    return sorted(x for part in parts for x in part)


def _initial_colors(g: Graph, fixed: Sequence[int] = (), colors: Sequence[int] | None = None
                    ) -> np.ndarray:
    size = g.vertex_count
    deg = np.array([len(nb) for nb in g.neighbors], dtype=np.int64)
    base = deg if colors is None else np.asarray(colors, dtype=np.int64) * (size + 1) + deg
    out = base * (len(fixed) + 1)
    for pos, v in enumerate(fixed, start=1):
        out[v] = -pos
    return out


def automorphism_group(g: Graph, *, fixed: Sequence[int] = (), colors: Sequence[int] | None = None,
                       max_vertices: int = DEFAULT_MAX_VERTICES, threads: int = 1,
                       generator_key: Callable[[VertexMap], object] | None = None
                       ) -> GroupDescription:
    """Automorphisms of ``g`` fixing each vertex in ``fixed`` (and the colour classes)."""
    if g.vertex_count > max_vertices:
        raise BoundError(
            f"graph has {g.vertex_count} vertices, engine bound is {max_vertices}"
        )
    if g.vertex_count == 0:
        return GroupDescription(1, [], [], "empty graph")
    elements = _search(g, _initial_colors(g, fixed, colors), threads=threads)
    gens = pick_generators(elements, key=generator_key) if len(elements) <= 20000 else []
    notes = "" if gens or len(elements) <= 1 else "generators skipped: group too large"
    return GroupDescription(len(elements), gens, elements, notes)


def stabilizer_fixing(g: Graph, fixed: Sequence[int], **kwargs) -> GroupDescription:
    return automorphism_group(g, fixed=fixed, **kwargs)


# -- the toric-reverse group on the block transposition graph ------------------


def dihedral_as_vertex_maps(n: int, convention: str = "right",
                            graph: Graph | None = None) -> list[tuple[ToricReverseElement, VertexMap]]:
    g = graph if graph is not None else build_bt_graph(n, convention)  # type: ignore[arg-type]
    out = []
    for e in dihedral_group(n, convention):  # type: ignore[arg-type]
        out.append((e, VertexMap(tuple(g.index[act_on_cuts(e, c)] for c in g.legend))))
    return out


def dihedral_name_key(names: dict[VertexMap, ToricReverseElement]) -> Callable[[VertexMap], object]:
    def key(x: VertexMap) -> object:
        e = names.get(x)
        if e is None:
            return (2, 0, x.mapping)
        return (int(e.reflected), e.r, x.mapping)
    return key


def check_theorem_aut_bt(n: int, threads: int = 1) -> list[Claim]:
    g = build_bt_graph(n)
    dmaps = dihedral_as_vertex_maps(n, graph=g)
    names = {vm: e for e, vm in dmaps}
    group = automorphism_group(g, threads=threads, generator_key=dihedral_name_key(names))
    want = 2 * (n + 1)
    claims = [
        Claim(f"|Aut(BTbar_{n})| = 2(n+1)", want, group.order),
        Claim(f"toric-reverse maps on T_{n} are distinct", want, len(names)),
        Claim(f"every toric-reverse map is an automorphism of BTbar_{n}", True,
              all(vm.is_automorphism(g) for vm in names)),
        Claim(f"Aut(BTbar_{n}) equals the toric-reverse image", True,
              set(group.elements) == set(names)),
    ]
    return claims


def describe_generators(group: GroupDescription, names: dict[VertexMap, ToricReverseElement]) -> str:
    labels = [str(names[x]) if x in names else "?" for x in group.generators]
    return f"order {group.order}; generators: {', '.join(labels) if labels else '(none)'}"


# -- N-triviality on the Cayley graph -----------------------------------------


def dihedral_on_cayley(g: Graph, convention: str = "left") -> list[VertexMap]:
    """The toric-reverse group acting on the vertices of a Cayley graph."""
    out = []
    for e in dihedral_group(g.n, convention):  # type: ignore[arg-type]
        out.append(VertexMap(tuple(g.index[act_on_perm(e, p)] for p in g.legend)))
    return out


def check_n_trivial(n: int, max_n: int = DEFAULT_MAX_N_TRIVIAL, threads: int = 1) -> list[Claim]:
    """Pointwise stabiliser of {ι} ∪ T_n in Aut(Cay) is trivial; stabiliser of ι is D_{n+1}."""
    if n > max_n:
        raise BoundError(f"N-triviality check for n={n} exceeds bound {max_n}")
    g = build_cayley(n, "left", max_n=max(max_n, n))
    bound = max(DEFAULT_MAX_VERTICES, g.vertex_count)
    iota = g.index[identity_perm(n)]
    tn = [g.index[as_permutation(c)] for c in enumerate_tn(n)]
    kernel = automorphism_group(g, fixed=[iota] + tn, max_vertices=bound, threads=threads)
    stab = automorphism_group(g, fixed=[iota], max_vertices=bound, threads=threads)
    dmaps = set(dihedral_on_cayley(g))
    want = 2 * (n + 1)
    return [
        Claim(f"|N| for Cay(Sym_{n}, T_{n})", 1, kernel.order),
        Claim(f"|Stab(iota)| in Aut(Cay(Sym_{n}, T_{n}))", want, stab.order),
        Claim(f"Stab(iota) equals the toric-reverse group (n={n})", True,
              set(stab.elements) == dmaps),
        Claim(f"|Aut(Cay(Sym_{n}, T_{n}))| = n!*2(n+1) (vertex-transitive)",
              math.factorial(n) * want, math.factorial(n) * stab.order),
    ]


def right_translation(g: Graph, h: Permutation) -> VertexMap:
    return VertexMap(tuple(g.index[compose(p, h)] for p in g.legend))


# -- the isomorphism onto Sym_{n+1} -------------------------------------------


def phi(h: Permutation, r: int) -> ZeroExtendedPermutation:
    """Image of the automorphism ``h∘f^r`` in the symmetric group on {0..n}."""
    n = h.n
    return extend_zero(inverse(h)) * alpha_power(n, (n + 1 - r) % (n + 1))


class _MapAlgebra:
    """Automorphisms of Cay(Sym_n, T_n) as rank arrays over Sym_n."""

    def __init__(self, n: int) -> None:
        self.n = n
        P = perm_array(n)
        self.perms = [Permutation.from_zero_based(row) for row in P.tolist()]
        self.rank = {p: a for a, p in enumerate(self.perms)}
        self.size = len(self.perms)
        self.toric = [
            np.array([self.rank[toric_map(p, r)] for p in self.perms], dtype=np.int64)
            for r in range(n + 1)
        ]
        # right translation by h: π -> π∘h
        self.translate = [rank_rows(P[:, np.array(h.zero_based())]) for h in self.perms]

    def element(self, h: Permutation, r: int) -> np.ndarray:
        """Vertex map of ``h∘f^r``: apply ``f_r`` then right-translate by ``h``."""
        return self.translate[self.rank[h]][self.toric[r]]

    @staticmethod
    def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a[b]


def phi_check(n: int, samples: int = 1000, exhaustive_max_n: int = 4, seed: int = 0,
              max_n: int = 6) -> list[Claim]:
    if n > max_n:
        raise BoundError(f"phi check for n={n} exceeds bound {max_n}")
    alg = _MapAlgebra(n)
    pairs = [(h, r) for h in alg.perms for r in range(n + 1)]
    arrays = {(h, r): alg.element(h, r) for h, r in pairs}
    lookup = {arr.tobytes(): key for key, arr in arrays.items()}
    order = math.factorial(n + 1)

    def product(a, b):
        composed = alg.compose(arrays[a], arrays[b])
        return lookup.get(composed.tobytes())

    if n <= exhaustive_max_n:
        tested = [(a, b) for a in pairs for b in pairs]
    else:
        rng = random.Random(seed)
        tested = [(rng.choice(pairs), rng.choice(pairs)) for _ in range(samples)]
    closed = True
    homomorphic = True
    for a, b in tested:
        ab = product(a, b)
        if ab is None:
            closed = False
            continue
        if phi(*ab) != phi(*a) * phi(*b):
            homomorphic = False
    images = {phi(h, r) for h, r in pairs}
    kernel = [key for key in pairs if phi(*key).image == tuple(range(n + 1))]

    # t = g∘w sends π to ω∘π
    w = reverse_perm(n)
    t_arr = np.array([alg.rank[compose(w, p)] for p in alg.perms], dtype=np.int64)
    g_arr = np.array([alg.rank[reverse_map(p)] for p in alg.perms], dtype=np.int64)
    gens = [(identity_perm(n), 1)] + [(as_permutation(c), 0) for c in enumerate_tn(n)]
    commutes = all(
        np.array_equal(t_arr[arrays[x]], arrays[x][t_arr]) for x in gens
    )
    return [
        Claim(f"|R(Cay)F| distinct maps (n={n})", order, len(lookup)),
        Claim(f"R(Cay)F closed under composition on {len(tested)} pairs", True, closed),
        Claim(f"Phi is a homomorphism on {len(tested)} pairs", True, homomorphic),
        Claim(f"ker(Phi) is trivial (n={n})", 1, len(kernel)),
        Claim(f"|Phi(R(Cay)F)| = (n+1)!", order, len(images)),
        Claim("t = g∘w equals reverse map after right translation by w", True,
              np.array_equal(g_arr[alg.translate[alg.rank[w]]], t_arr)),
        Claim("t is an involution", True, np.array_equal(t_arr[t_arr], np.arange(alg.size))),
        Claim("t commutes with f and with right translations by T_n", True, commutes),
        Claim("t lies outside R(Cay)F", True, t_arr.tobytes() not in lookup),
    ]
