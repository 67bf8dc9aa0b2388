import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from blocktrans.perm import (
    Permutation,
    ZeroExtendedPermutation,
    all_perms,
    compose,
    extend_zero,
    identity_perm,
    inverse,
    perm_array,
    rank,
    rank_rows,
    restrict,
    reverse_perm,
    unrank,
)

from oracles import comp, inv


def P(*img):
    return Permutation(tuple(img))


@st.composite
def perms(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_compose_examples():
    pi = P(3, 1, 2)
    assert compose(identity_perm(3), pi) == pi
    assert compose(P(1, 4, 5, 2, 3), P(2, 3, 4, 5, 1)) == Permutation(comp((1, 4, 5, 2, 3), (2, 3, 4, 5, 1)))
    assert compose(P(1, 4, 5, 2, 3), P(2, 3, 4, 5, 1)) == P(4, 5, 2, 3, 1)
    assert compose(pi, inverse(pi)) == identity_perm(3)


def test_inverse_examples():
    assert inverse(identity_perm(4)) == identity_perm(4)
    assert inverse(P(2, 3, 1)) == P(3, 1, 2)
    assert inverse(reverse_perm(5)) == reverse_perm(5)


def test_named_permutations():
    assert reverse_perm(4) == P(4, 3, 2, 1)
    assert identity_perm(3) == P(1, 2, 3)
    assert compose(reverse_perm(4), reverse_perm(4)) == identity_perm(4)


def test_zero_extension():
    z = extend_zero(P(2, 1))
    assert z == ZeroExtendedPermutation((0, 2, 1))
    assert restrict(z) == P(2, 1)
    with pytest.raises(ValueError):
        restrict(ZeroExtendedPermutation((1, 0, 2)))


@pytest.mark.parametrize("bad", [(), (1, 1), (0, 1), (2, 3)])
def test_invalid_images_rejected(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        compose(P(1, 2), P(1, 2, 3))


def test_parse_and_str():
    assert Permutation.parse("3 2 1") == P(3, 2, 1)
    assert Permutation.parse("[3,2,1]") == P(3, 2, 1)
    assert str(P(3, 2, 1)) == "3 2 1"
    with pytest.raises(ValueError):
        Permutation.parse("  ")


def test_call_is_one_based():
    p = P(2, 3, 1)
    assert [p(t) for t in (1, 2, 3)] == [2, 3, 1]
    assert Permutation.from_zero_based(p.zero_based()) == p


@given(perms())
def test_compose_matches_tuple_oracle(p):
    q = Permutation(tuple(reversed(p.image)))
    assert compose(p, q).image == comp(p.image, q.image)
    assert inverse(p).image == inv(p.image)


@given(perms(), st.data())
def test_associativity(p, data):
    q = Permutation(tuple(data.draw(st.permutations(range(1, p.n + 1)))))
    r = Permutation(tuple(data.draw(st.permutations(range(1, p.n + 1)))))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rank_unrank_roundtrip(n):
    ps = list(all_perms(n))
    assert len(ps) == math.factorial(n)
    assert [rank(p) for p in ps] == list(range(len(ps)))
    assert all(unrank(rank(p), n) == p for p in ps)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_perm_array_and_vector_rank(n):
    arr = perm_array(n)
    assert arr.shape == (math.factorial(n), n)
    assert np.array_equal(rank_rows(arr), np.arange(len(arr)))
    assert [tuple(int(x) + 1 for x in row) for row in arr[:3]] == [p.image for p in list(all_perms(n))[:3]]


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank(6, 3)
