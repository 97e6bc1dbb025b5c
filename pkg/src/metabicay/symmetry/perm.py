"""Permutations of ``range(n)`` in image-array form.

Permutations act on the right: ``x ** (p * q) == q[p[x]]``, i.e. ``p * q``
applies ``p`` first.  This matches the exponent notation used for graph
automorphisms throughout the package.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence


class Permutation(tuple):
    """Immutable permutation stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def checked(cls, images: Sequence[int]) -> Permutation:
        p = cls(images)
        if sorted(p) != list(range(len(p))):
            raise ValueError("not a permutation")
        return p

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation([other[x] for x in self])

    def __invert__(self) -> Permutation:
        inv = [0] * len(self)
        for x, y in enumerate(self):
            inv[y] = x
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return (~self) ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, by: Permutation) -> Permutation:
        """``by^-1 * self * by``."""
        return (~by) * self * by

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self))

    def support(self) -> list[int]:
        return [x for x, y in enumerate(self) if x != y]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for x in range(len(self)):
            if seen[x]:
                continue
            cyc = [x]
            seen[x] = True
            y = self[x]
            while y != x:
                cyc.append(y)
                seen[y] = True
                y = self[y]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    # tuple's + and * mean concatenation; only * is redefined above
    def __add__(self, other):
        raise TypeError("permutations do not support +")
