import math

import pytest
from hypothesis import given, strategies as st

from blocktrans.cuts import CutPoints, as_permutation, enumerate_tn, sigma
from blocktrans.perm import Permutation, ZeroExtendedPermutation, all_perms, identity_perm, inverse, reverse_perm
from blocktrans.toric import (
    ToricReverseElement,
    act_on_cuts,
    act_on_cuts_via_perm,
    act_on_perm,
    alpha_power,
    dihedral_compose,
    dihedral_group,
    dihedral_inverse,
    reverse_map,
    reverse_map_pointwise,
    toric_class,
    toric_map,
    toric_map_right,
    toric_map_shifted,
)

from oracles import toric_shift


def P(*img):
    return Permutation(tuple(img))


@st.composite
def perms(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_alpha_power_examples():
    assert alpha_power(4, 0) == ZeroExtendedPermutation((0, 1, 2, 3, 4))
    assert alpha_power(4, 1) == ZeroExtendedPermutation((1, 2, 3, 4, 0))
    assert alpha_power(4, 4) == ZeroExtendedPermutation((4, 0, 1, 2, 3))


def test_toric_map_examples():
    assert toric_map(P(3, 1, 2), 1) == Permutation(toric_shift((3, 1, 2), 1))
    assert toric_map(P(3, 1, 2), 1) == P(2, 3, 1)
    for r in range(5):
        assert toric_map(identity_perm(4), r) == identity_perm(4)


def test_toric_map_right_examples():
    assert toric_map_right(as_permutation(sigma(5, 1, 3, 5)), 1) == as_permutation(sigma(5, 0, 2, 4))
    assert toric_map_right(as_permutation(sigma(5, 0, 2, 4)), 1) == as_permutation(sigma(5, 1, 3, 5))


def test_reverse_map_examples():
    assert reverse_map(identity_perm(4)) == identity_perm(4)
    assert reverse_map(P(3, 1, 2)) == P(2, 3, 1)


@given(perms(), st.integers(0, 20))
def test_conjugation_and_shift_forms_agree(p, r):
    assert toric_map(p, r) == toric_map_shifted(p, r)
    assert toric_map(p, r).image == toric_shift(p.image, r % (p.n + 1))


@given(perms(), st.integers(0, 8), st.integers(0, 8))
def test_toric_maps_compose_additively(p, s, r):
    assert toric_map(toric_map(p, r), s) == toric_map(p, s + r)


@given(perms(), st.integers(0, 8))
def test_reverse_conjugates_rotation(p, r):
    n = p.n
    assert reverse_map(toric_map(reverse_map(p), r)) == toric_map(p, n + 1 - r % (n + 1))
    assert reverse_map(reverse_map(p)) == p
    assert reverse_map(p) == reverse_map_pointwise(p)


@given(perms(), st.integers(0, 8))
def test_toric_map_commutes_with_inversion_pairing(p, r):
    # f_r(π)^-1 = f_{π_r}(π^-1)
    lifted = (0,) + p.image
    rr = r % (p.n + 1)
    assert inverse(toric_map(p, rr)) == toric_map(inverse(p), lifted[rr])


def test_toric_classes():
    assert toric_class(identity_perm(5)) == {identity_perm(5)}
    assert toric_class(reverse_perm(5)) == {reverse_perm(5)}
    classes = {toric_class(p) for p in all_perms(4)}
    assert sum(len(c) == 1 for c in classes) == 4  # Euler phi of 5
    assert sum(len(c) for c in classes) == math.factorial(4)
    assert all(5 % len(c) == 0 for c in classes)


def test_act_on_cuts_examples():
    n = 5
    g = ToricReverseElement(n, 0, True)
    f = ToricReverseElement(n, 1)
    assert act_on_cuts(g, sigma(n, 0, 2, 4)) == sigma(n, 1, 3, 5)
    assert act_on_cuts(f, sigma(n, 2, 3, 5)) == sigma(n, 1, 2, 4)
    assert act_on_cuts(f, sigma(n, 0, 2, 4)) == sigma(n, 1, 3, 5)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("convention", ["left", "right"])
def test_closed_forms_match_conjugation(n, convention):
    for e in dihedral_group(n, convention):
        for c in enumerate_tn(n):
            assert act_on_cuts(e, c) == act_on_cuts_via_perm(e, c)


def test_dihedral_compose_examples():
    n = 6
    one = ToricReverseElement(n, 0)
    g = ToricReverseElement(n, 0, True)
    for x in dihedral_group(n):
        assert dihedral_compose(one, x) == x
    for r in range(n + 1):
        assert g * ToricReverseElement(n, r) * g == ToricReverseElement(n, n + 1 - r)
        refl = ToricReverseElement(n, r, True)
        assert refl * refl == one


@pytest.mark.parametrize("convention", ["left", "right"])
def test_dihedral_compose_matches_action(convention):
    n = 5
    group = dihedral_group(n, convention)
    assert len(set(group)) == 2 * (n + 1)
    probes = [as_permutation(c) for c in enumerate_tn(n)] + [P(3, 5, 1, 4, 2)]
    for a in group:
        assert dihedral_compose(a, dihedral_inverse(a)) == ToricReverseElement(n, 0, False, convention)
        for b in group:
            ab = a * b
            assert all(act_on_perm(ab, p) == act_on_perm(a, act_on_perm(b, p)) for p in probes)


def test_element_names():
    names = [str(e) for e in dihedral_group(3)]
    assert names == ["1", "f", "f^2", "f^3", "g", "f·g", "f^2·g", "f^3·g"]


def test_mixed_conventions_rejected():
    with pytest.raises(ValueError):
        ToricReverseElement(4, 1, False, "left") * ToricReverseElement(4, 1, False, "right")
    with pytest.raises(ValueError):
        ToricReverseElement(4, 1, False, "up")
    with pytest.raises(ValueError):
        act_on_cuts(ToricReverseElement(4, 1), CutPoints(5, 0, 1, 2))
