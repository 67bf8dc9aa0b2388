"""Block transpositions named by their cut points.

``CutPoints(n, i, j, k)`` with ``0 <= i < j < k <= n`` is the permutation
that swaps the adjacent blocks ``i+1..j`` and ``j+1..k``; right
multiplication ``p∘σ(i,j,k)`` splices those blocks of ``p``.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass

from .perm import Permutation, compose


class PartitionClass(str, enum.Enum):
    B = "B"  # powers of σ(0,1,n)
    L = "L"  # σ(0,j,k), k < n
    F = "F"  # σ(i,j,n), i > 0
    S = "S"  # block transpositions on {2, ..., n-1}

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class CutPoints:
    n: int
    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.i < self.j < self.k <= self.n:
            raise ValueError(
                f"invalid cut points ({self.i},{self.j},{self.k}) for n={self.n}"
            )

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"

    def to_dict(self) -> dict[str, int]:
        return {"n": self.n, "i": self.i, "j": self.j, "k": self.k}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> CutPoints:
        return cls(int(data["n"]), int(data["i"]), int(data["j"]), int(data["k"]))

    @classmethod
    def parse(cls, text: str, n: int) -> CutPoints:
        m = re.fullmatch(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*", text)
        if m is None:
            raise ValueError(f"cannot parse cut points from {text!r}")
        return cls(n, *(int(g) for g in m.groups()))


def sigma(n: int, i: int, j: int, k: int) -> CutPoints:
    return CutPoints(n, i, j, k)


def as_permutation(c: CutPoints) -> Permutation:
    n, i, j, k = c.n, c.i, c.j, c.k
    img = (
        tuple(range(1, i + 1))
        + tuple(range(j + 1, k + 1))
        + tuple(range(i + 1, j + 1))
        + tuple(range(k + 1, n + 1))
    )
    return Permutation(img)


def as_permutation_pointwise(c: CutPoints) -> Permutation:
    """Same permutation, built from the piecewise formula for each position t."""
    n, i, j, k = c.n, c.i, c.j, c.k
    img = []
    for t in range(1, n + 1):
        if t <= i or t >= k + 1:
            img.append(t)
        elif t <= k - j + i:
            img.append(t + j - i)
        else:
            img.append(t + j - k)
    return Permutation(tuple(img))


def apply_right(p: Permutation, c: CutPoints) -> Permutation:
    """Return ``p∘σ(i,j,k)``: the blocks ``p[i+1..j]`` and ``p[j+1..k]`` swapped."""
    if p.n != c.n:
        raise ValueError(f"degree mismatch: {p.n} != {c.n}")
    a = p.image
    i, j, k = c.i, c.j, c.k
    return Permutation(a[:i] + a[j:k] + a[i:j] + a[k:])


def invert_cuts(c: CutPoints) -> CutPoints:
    return CutPoints(c.n, c.i, c.k - c.j + c.i, c.k)


def power_cuts(n: int, i: int, k: int, e: int) -> CutPoints:
    """``σ(i,i+1,k)`` raised to the power ``e``, for ``1 <= e <= k-i-1``."""
    if not 1 <= e <= k - i - 1:
        raise ValueError(f"exponent {e} out of range 1..{k - i - 1}")
    return CutPoints(n, i, i + e, k)


def tn_size(n: int) -> int:
    return (n + 1) * n * (n - 1) // 6


def enumerate_tn(n: int) -> list[CutPoints]:
    """All block transpositions on [n], lexicographic in (i, j, k)."""
    if n < 2:
        raise ValueError(f"T_n is empty for n={n}; need n >= 2")
    return [
        CutPoints(n, i, j, k)
        for i in range(n - 1)
        for j in range(i + 1, n)
        for k in range(j + 1, n + 1)
    ]


def classify(c: CutPoints) -> PartitionClass:
    if c.i == 0:
        return PartitionClass.B if c.k == c.n else PartitionClass.L
    return PartitionClass.F if c.k == c.n else PartitionClass.S


def class_sizes(n: int) -> dict[PartitionClass, int]:
    sizes = {cls: 0 for cls in PartitionClass}
    for c in enumerate_tn(n):
        sizes[classify(c)] += 1
    return sizes


def cuts_from_permutation(p: Permutation) -> CutPoints | None:
    """Decode ``p`` as a block transposition, or return None if it is not one.

    A block transposition is a fixed prefix ``1..i``, then an ascending run
    starting at ``j+1`` and ending at ``k``, then ``i+1..j``, then ``k+1..n``.
    """
    img = p.image
    n = p.n
    i = 0
    while i < n and img[i] == i + 1:
        i += 1
    if i == n:
        return None
    j = img[i] - 1
    if j <= i:
        return None
    end = i
    while end + 1 < n and img[end + 1] == img[end] + 1:
        end += 1
    k = img[end]
    if k <= j:
        return None
    c = CutPoints(n, i, j, k)
    return c if as_permutation(c).image == img else None


def is_block_transposition(p: Permutation) -> bool:
    return cuts_from_permutation(p) is not None


def beta(n: int) -> CutPoints:
    return CutPoints(n, 0, 1, n)


def compose_cuts(a: CutPoints, b: CutPoints) -> Permutation:
    return compose(as_permutation(a), as_permutation(b))
