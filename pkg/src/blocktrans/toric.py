"""Toric maps, the reverse map and the dihedral toric-reverse group.

Permutations of [n] are lifted to {0, ..., n} as ``[0 π]`` (0 fixed), and
``α`` is the cyclic shift ``x -> x + 1 (mod n+1)``.  The toric map
``f_r`` conjugates by powers of ``α``; ``g`` conjugates by the reverse
permutation.  The right-invariant twin is ``f̄_r(π) = f_r(π⁻¹)⁻¹``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .cuts import CutPoints, as_permutation, cuts_from_permutation
from .perm import (
    Permutation,
    ZeroExtendedPermutation,
    extend_zero,
    inverse,
    restrict,
)

Convention = Literal["left", "right"]
CONVENTIONS = ("left", "right")


@lru_cache(maxsize=256)
def alpha_power(n: int, r: int) -> ZeroExtendedPermutation:
    if not 0 <= r <= n:
        raise ValueError(f"exponent {r} out of range 0..{n}")
    m = n + 1
    return ZeroExtendedPermutation(tuple((x + r) % m for x in range(m)))


def _value_at(p: Permutation, r: int) -> int:
    # π_0 = 0
    return 0 if r == 0 else p(r)


def toric_map(p: Permutation, r: int) -> Permutation:
    """``f_r(π)``: conjugation ``α^(n+1-π_r) ∘ [0 π] ∘ α^r`` restricted to [n]."""
    img = p.image
    n = len(img)
    r %= n + 1
    lifted = (0,) + img
    outer = alpha_power(n, (n + 1 - lifted[r]) % (n + 1)).image
    inner = alpha_power(n, r).image
    conj = [outer[lifted[inner[x]]] for x in range(n + 1)]
    # conjugation fixes 0, so this is the restriction to [n]
    return Permutation._trusted(tuple(conj[1:]))


def toric_map_shifted(p: Permutation, r: int) -> Permutation:
    """``f_r(π)`` through the index-shift form ``π_{r+t} - π_r (mod n+1)``."""
    n = p.n
    m = n + 1
    r %= m
    pr = _value_at(p, r)
    return Permutation(
        tuple((_value_at(p, (r + t) % m) - pr) % m for t in range(1, n + 1))
    )


def toric_map_right(p: Permutation, r: int) -> Permutation:
    return inverse(toric_map(inverse(p), r))


def reverse_map(p: Permutation) -> Permutation:
    """``g(π)``: conjugation of ``[0 π]`` by ``[0 ω]``."""
    n = p.n
    w0 = ZeroExtendedPermutation((0,) + tuple(range(n, 0, -1)))
    return restrict(w0 * extend_zero(p) * w0)


def reverse_map_pointwise(p: Permutation) -> Permutation:
    n = p.n
    return Permutation(tuple(n + 1 - p(n + 1 - t) for t in range(1, n + 1)))


def toric_class(p: Permutation) -> frozenset[Permutation]:
    return frozenset(toric_map(p, r) for r in range(p.n + 1))


# -- the dihedral group -------------------------------------------------------


@dataclass(frozen=True, order=True)
class ToricReverseElement:
    """``f^r`` (``reflected=False``) or ``f^r∘g`` (``reflected=True``).

    With ``convention="right"`` the rotation is ``f̄`` instead of ``f``.
    ``g`` is applied first, so a reflected element sends π to ``f_r(g(π))``.
    """

    n: int
    r: int
    reflected: bool = False
    convention: Convention = "left"

    def __post_init__(self) -> None:
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        object.__setattr__(self, "r", self.r % (self.n + 1))

    def __str__(self) -> str:
        # same spelling in both conventions; the graph fixes which f is meant
        base = "f"
        if self.r == 0:
            rot = "" if self.reflected else "1"
        elif self.r == 1:
            rot = base
        else:
            rot = f"{base}^{self.r}"
        if not self.reflected:
            return rot
        return f"{rot}·g" if rot else "g"

    def __call__(self, p: Permutation) -> Permutation:
        return act_on_perm(self, p)

    def __mul__(self, other: ToricReverseElement) -> ToricReverseElement:
        return dihedral_compose(self, other)


def dihedral_group(n: int, convention: Convention = "left") -> list[ToricReverseElement]:
    """All 2(n+1) elements: rotations first, then reflections, each by r."""
    return [
        ToricReverseElement(n, r, refl, convention)
        for refl in (False, True)
        for r in range(n + 1)
    ]


def dihedral_compose(a: ToricReverseElement, b: ToricReverseElement) -> ToricReverseElement:
    """``a∘b`` (b applied first), normalised with ``g∘f_r = f_(n+1-r)∘g``."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    if a.convention != b.convention:
        raise ValueError("cannot compose elements of different conventions")
    r = a.r - b.r if a.reflected else a.r + b.r
    return ToricReverseElement(a.n, r, a.reflected != b.reflected, a.convention)


def dihedral_inverse(a: ToricReverseElement) -> ToricReverseElement:
    if a.reflected:
        return a
    return ToricReverseElement(a.n, -a.r, False, a.convention)


def act_on_perm(e: ToricReverseElement, p: Permutation) -> Permutation:
    if p.n != e.n:
        raise ValueError(f"degree mismatch: {p.n} != {e.n}")
    if e.reflected:
        p = reverse_map(p)
    if e.convention == "left":
        return toric_map(p, e.r)
    return toric_map_right(p, e.r)


def _f_cuts(c: CutPoints) -> CutPoints:
    n, i, j, k = c.n, c.i, c.j, c.k
    if i > 0:
        return CutPoints(n, i - 1, j - 1, k - 1)
    return CutPoints(n, k - j - 1, n - j, n)


def _fbar_cuts(c: CutPoints) -> CutPoints:
    n, i, j, k = c.n, c.i, c.j, c.k
    if i > 0:
        return CutPoints(n, i - 1, j - 1, k - 1)
    return CutPoints(n, j - 1, k - 1, n)


def _g_cuts(c: CutPoints) -> CutPoints:
    n = c.n
    return CutPoints(n, n - c.k, n - c.j, n - c.i)


def act_on_cuts(e: ToricReverseElement, c: CutPoints) -> CutPoints:
    """Closed-form action of a toric-reverse element on a block transposition."""
    if c.n != e.n:
        raise ValueError(f"degree mismatch: {c.n} != {e.n}")
    if e.reflected:
        c = _g_cuts(c)
    step = _f_cuts if e.convention == "left" else _fbar_cuts
    for _ in range(e.r):
        c = step(c)
    return c


def act_on_cuts_via_perm(e: ToricReverseElement, c: CutPoints) -> CutPoints:
    image = cuts_from_permutation(act_on_perm(e, as_permutation(c)))
    if image is None:
        raise AssertionError(f"{e} maps {c} outside T_n")
    return image
