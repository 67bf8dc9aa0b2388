"""Permutations of [n] in one-line notation, composed functionally.

``compose(p, q)`` is ``p∘q``, i.e. ``t -> p(q(t))``.  Images are 1-based
values stored in a 0-indexed tuple: ``p.image[t - 1] == p(t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        img = tuple(int(x) for x in self.image)
        if len(img) < 1:
            raise ValueError("permutation degree must be at least 1")
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")
        object.__setattr__(self, "image", img)

    @classmethod
    def _trusted(cls, img: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection of 1..n
        obj = object.__new__(cls)
        object.__setattr__(obj, "image", img)
        return obj

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, t: int) -> int:
        return self.image[t - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.image))

    def __repr__(self) -> str:
        return f"Permutation([{self}])"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space (or comma) separated images, e.g. ``"2 3 1"``."""
        cleaned = text.replace(",", " ").strip().strip("[]")
        if not cleaned:
            raise ValueError("empty permutation")
        return cls(tuple(int(tok) for tok in cleaned.split()))

    @classmethod
    def from_zero_based(cls, seq: Iterable[int]) -> Permutation:
        return cls(tuple(int(x) + 1 for x in seq))

    def zero_based(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.image)


@dataclass(frozen=True)
class ZeroExtendedPermutation:
    """A permutation of {0, 1, ..., n}; ``image[x]`` is the image of x."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        img = tuple(int(x) for x in self.image)
        if len(img) < 2:
            raise ValueError("zero-extended permutation needs n >= 1")
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 0..{len(img) - 1}: {img}")
        object.__setattr__(self, "image", img)

    @classmethod
    def _trusted(cls, img: tuple[int, ...]) -> ZeroExtendedPermutation:
        obj = object.__new__(cls)
        object.__setattr__(obj, "image", img)
        return obj

    @property
    def n(self) -> int:
        return len(self.image) - 1

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: ZeroExtendedPermutation) -> ZeroExtendedPermutation:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        img = self.image
        return ZeroExtendedPermutation._trusted(tuple([img[x] for x in other.image]))

    def inverse(self) -> ZeroExtendedPermutation:
        inv = [0] * len(self.image)
        for x, y in enumerate(self.image):
            inv[y] = x
        return ZeroExtendedPermutation._trusted(tuple(inv))

    def __str__(self) -> str:
        return " ".join(map(str, self.image))


def _check_same_degree(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} != {q.n}")


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    _check_same_degree(outer, inner)
    img = outer.image
    return Permutation._trusted(tuple([img[x - 1] for x in inner.image]))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for t, x in enumerate(p.image, start=1):
        inv[x - 1] = t
    return Permutation._trusted(tuple(inv))


def identity_perm(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reverse_perm(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def extend_zero(p: Permutation) -> ZeroExtendedPermutation:
    return ZeroExtendedPermutation._trusted((0,) + p.image)


def restrict(z: ZeroExtendedPermutation) -> Permutation:
    if z.image[0] != 0:
        raise ValueError(f"cannot restrict: 0 is mapped to {z.image[0]}")
    return Permutation._trusted(z.image[1:])


def all_perms(n: int) -> Iterator[Permutation]:
    """Every permutation of [n], in lexicographic order of one-line notation."""
    for img in _itertools_permutations(range(1, n + 1)):
        yield Permutation(img)


# -- ranking ------------------------------------------------------------------


def rank(p: Permutation) -> int:
    """Lexicographic rank of ``p`` among all permutations of its degree."""
    n = p.n
    r = 0
    img = p.image
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if img[j] < img[i])
        r += smaller * math.factorial(n - 1 - i)
    return r


def unrank(r: int, n: int) -> Permutation:
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for degree {n}")
    pool = list(range(1, n + 1))
    img = []
    for i in range(n - 1, -1, -1):
        q, r = divmod(r, math.factorial(i))
        img.append(pool.pop(q))
    return Permutation(tuple(img))


def perm_array(n: int) -> np.ndarray:
    """All permutations of degree n as a (n!, n) array of 0-based images, lex order."""
    return np.array(list(_itertools_permutations(range(n))), dtype=np.int8).reshape(-1, n)


def rank_rows(rows: np.ndarray) -> np.ndarray:
    """Vectorised lexicographic rank of each row of 0-based permutations."""
    rows = np.asarray(rows)
    m, n = rows.shape
    out = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        smaller = (rows[:, i + 1:] < rows[:, i:i + 1]).sum(axis=1)
        out += smaller * math.factorial(n - 1 - i)
    return out
