import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from blocktrans.cuts import as_permutation, enumerate_tn, invert_cuts, sigma
from blocktrans.graphs import BoundError
from blocktrans.perm import Permutation, all_perms, identity_perm, inverse, rank, reverse_perm
from blocktrans.sortdist import (
    _meet_in_middle,
    dihedral_images,
    distance,
    distance_table,
    sorting_sequence,
    toric_reduce,
)

from oracles import bfs_distances


def P(*img):
    return Permutation(tuple(img))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_table_matches_tuple_bfs(n):
    oracle = bfs_distances(n)
    table = distance_table(n)
    assert len(oracle) == math.factorial(n)
    for p in all_perms(n):
        assert table[rank(p)] == oracle[p.image]


def test_examples():
    assert distance(identity_perm(5)) == 0
    assert distance(P(3, 2, 1)) == 2
    for c in enumerate_tn(6):
        assert distance(as_permutation(c)) == 1


def test_trace_examples():
    assert len(sorting_sequence(identity_perm(4))) == 0
    c = sigma(5, 1, 2, 4)
    assert sorting_sequence(as_permutation(c)).moves == (invert_cuts(c),)
    trace = sorting_sequence(P(3, 2, 1))
    assert [str(m) for m in trace.moves] == ["(0,1,2)", "(0,2,3)"]
    assert trace.lines() == ["(0,1,2) -> 2 3 1", "(0,2,3) -> 1 2 3"]
    assert trace.is_valid() and trace.end == identity_perm(3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_trace_is_shortest_and_sorts(img):
    p = Permutation(tuple(img))
    trace = sorting_sequence(p)
    assert len(trace) == distance(p)
    assert trace.replay()[-1] == identity_perm(p.n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_inverse_and_dihedral_invariance(n):
    for p in all_perms(n):
        d = distance(p)
        assert distance(inverse(p)) == d
        assert {distance(q) for q in dihedral_images(p)} == {d}


def test_meet_in_middle_agrees_with_table():
    table = distance_table(8, max_n=8)
    rng = random.Random(3)
    for _ in range(25):
        img = list(range(1, 9))
        rng.shuffle(img)
        p = Permutation(tuple(img))
        assert _meet_in_middle(p) == table[rank(p)]


def test_distance_above_table():
    assert distance(reverse_perm(9)) == 5
    assert distance(as_permutation(sigma(9, 2, 5, 7))) == 1


def test_bounds():
    with pytest.raises(BoundError):
        distance(identity_perm(10))
    with pytest.raises(BoundError):
        distance_table(8)


def test_distance_table_read_only():
    t = distance_table(4)
    with pytest.raises(ValueError):
        t[0] = 3


def test_toric_reduce():
    assert toric_reduce(identity_perm(5)) == identity_perm(5)
    assert toric_reduce(reverse_perm(5)) == reverse_perm(5)
    p = P(3, 1, 4, 2)
    assert toric_reduce(p) == min(dihedral_images(p), key=lambda q: q.image)
    assert distance(toric_reduce(p)) == distance(p)
