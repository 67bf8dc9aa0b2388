"""Acceptance gate: one check per criterion, each with its runtime limit.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the summary lines,
or ``python3 tests/test_acceptance.py`` for the lines alone.  Every line has
the form ``CRITERION <k> PASS|FAIL <seconds>s (limit <L>s) <detail>``.
"""

from __future__ import annotations

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from blocktrans.aut import check_n_trivial, check_theorem_aut_bt, phi_check
from blocktrans.cuts import PartitionClass, as_permutation, class_sizes, enumerate_tn, tn_size
from blocktrans.graphs import (
    bipartite_degrees,
    build_bt_graph,
    build_btv_graph,
    degree_report,
    expected_em_edges,
    hamiltonian_cycle_V,
    maximal_two_cliques,
    validate_cycle,
    vertices_of_class,
)
from blocktrans.perm import all_perms, inverse
from blocktrans.report import Claim
from blocktrans.sortdist import dihedral_images, distance
from blocktrans.toric import act_on_cuts, act_on_cuts_via_perm, dihedral_group
from blocktrans.verify import Options, check_toric_algebra, suite_dihedral_regular_on_V

from oracles import all_bt, bt_edges


def _failed(claims):
    return [c.line() for c in claims if not c.passed]


def criterion_1():
    bad = [n for n in range(2, 13)
           if not len(enumerate_tn(n)) == tn_size(n) == len(all_bt(n)) == n * (n + 1) * (n - 1) // 6]
    return not bad, f"n=2..12 mismatches: {bad}"


def criterion_2():
    bad = []
    for n in range(4, 13):
        want = {
            PartitionClass.B: n - 1,
            PartitionClass.L: (n - 1) * (n - 2) // 2,
            PartitionClass.F: (n - 1) * (n - 2) // 2,
            PartitionClass.S: (n - 1) * (n - 2) * (n - 3) // 6,
        }
        if class_sizes(n) != want:
            bad.append(n)
    return not bad, f"n=4..12 mismatches: {bad}"


def criterion_3():
    bad = []
    for n in range(4, 9):
        for e in dihedral_group(n, "right"):
            for c in enumerate_tn(n):
                if act_on_cuts(e, c) != act_on_cuts_via_perm(e, c):
                    bad.append((n, str(e), str(c)))
    return not bad, f"n=4..8, first mismatches: {bad[:3]}"


def criterion_4():
    opts = Options(exhaustive_max_n=5, samples=10_000, seed=0)
    bad = []
    for n in range(2, 8):
        bad += _failed(check_toric_algebra(n, opts))
    return not bad, f"n=2..5 exhaustive, n=6,7 sampled; failures: {bad}"


def criterion_5():
    got = {}
    bad = []
    for n in range(4, 9):
        g = build_bt_graph(n)
        want = 3 if n == 4 else 2 * (n - 2)
        got[n] = degree_report(g)
        # edge set cross-checked against the tuple oracle
        edges = {(g.legend[u].triple, g.legend[v].triple) for u, v in g.edges()}
        if edges != bt_edges(n) or got[n] != {want: g.vertex_count}:
            bad.append(n)
    return not bad, f"degree reports {got}; failing n: {bad}"


def criterion_6():
    bad = []
    for n in range(5, 9):
        g = build_bt_graph(n)
        B, L, F, S = (vertices_of_class(g, k) for k in PartitionClass)
        lf_b = bipartite_degrees(g, L + F, B)
        ok = (all(lf_b[v] == 1 for v in L + F) and all(lf_b[v] == n - 2 for v in B)
              and set(bipartite_degrees(g, L, F).values()) == {1}
              and set(bipartite_degrees(g, B, S).values()) == {0})
        if not ok:
            bad.append(n)
    return not bad, f"n=5..8 failing: {bad}"


def criterion_7():
    bad = []
    for n in range(5, 9):
        g = build_bt_graph(n)
        found = {frozenset((g.legend[u], g.legend[v])) for u, v in maximal_two_cliques(g)}
        want = {frozenset(e.endpoints) for e in expected_em_edges(n)}
        if len(found) != n + 1 or found != want:
            bad.append(n)
    return not bad, f"n=5..8 failing: {bad}"


def criterion_8():
    bad = []
    for n in range(5, 9):
        h = build_btv_graph(n)
        ok = h.vertex_count == 2 * (n + 1) and degree_report(h) == {3: h.vertex_count}
        ok &= not _failed(suite_dihedral_regular_on_V(n, Options()))
        ok &= validate_cycle(h, hamiltonian_cycle_V(n)) == []
        if not ok:
            bad.append(n)
    return not bad, f"n=5..8 failing: {bad}"


def criterion_9():
    bad = []
    orders = {}
    for n in range(4, 9):
        claims = check_theorem_aut_bt(n)
        orders[n] = claims[0].got
        bad += _failed(claims)
    return not bad, f"orders {orders}; failures: {bad}"


def criterion_10():
    bad = []
    for n in (4, 5, 6):
        bad += _failed(check_n_trivial(n))
    return not bad, f"n=4,5,6 failures: {bad}"


def criterion_11():
    bad = []
    for n in (3, 4):
        bad += _failed(phi_check(n, exhaustive_max_n=4))
    bad += _failed(phi_check(5, samples=1000, exhaustive_max_n=4, seed=0))
    return not bad, f"n=3,4 all pairs, n=5 1000 pairs; failures: {bad}"


def criterion_12():
    bad = []
    for n in range(2, 6):
        tn = {as_permutation(c) for c in enumerate_tn(n)}
        for p in all_perms(n):
            d = distance(p)
            if (d == 1) != (p in tn):
                bad.append(("T_n", str(p)))
            if distance(inverse(p)) != d:
                bad.append(("inverse", str(p)))
            if any(distance(q) != d for q in dihedral_images(p)):
                bad.append(("dihedral", str(p)))
    return not bad, f"n=2..5 exhaustive; first failures: {bad[:3]}"


CRITERIA = [
    (1, criterion_1, 1.0),
    (2, criterion_2, 1.0),
    (3, criterion_3, 5.0),
    (4, criterion_4, 10.0),
    (5, criterion_5, 5.0),
    (6, criterion_6, 5.0),
    (7, criterion_7, 5.0),
    (8, criterion_8, 5.0),
    (9, criterion_9, 60.0),
    (10, criterion_10, None),
    (11, criterion_11, 30.0),
    (12, criterion_12, 10.0),
]


def evaluate(number, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = "none" if limit is None else f"{limit:g}s"
    line = f"CRITERION {number} {status} {elapsed:.2f}s (limit {bound}) {detail}"
    return ok, in_time, line


@pytest.mark.parametrize("number,fn,limit", CRITERIA, ids=[f"criterion_{k}" for k, _, _ in CRITERIA])
def test_criterion(number, fn, limit, capsys):
    ok, in_time, line = evaluate(number, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


@pytest.mark.slow
def test_n_trivial_at_7():
    # opt-in: BLOCKTRANS_SLOW=1
    claims = check_n_trivial(7, max_n=7)
    assert not _failed(claims)


if __name__ == "__main__":
    results = [evaluate(*row) for row in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and t for ok, t, _ in results) else 1)
