"""Permutation groups with a stabilizer chain (deterministic Schreier-Sims)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import lcm, prod
from typing import Iterable, Iterator, Sequence

from .perm import Permutation


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple([q[x] for x in p])


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _is_id(p: tuple) -> bool:
    return all(x == y for x, y in enumerate(p))


def _first_moved(p: tuple) -> int:
    for x, y in enumerate(p):
        if x != y:
            return x
    raise ValueError("identity moves no point")


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    # transversal[x] maps `point` to x; inverses are cached alongside
    transversal: dict = field(default_factory=dict)
    inverses: dict = field(default_factory=dict)

    def rebuild(self, n: int) -> None:
        ident = tuple(range(n))
        trans = {self.point: ident}
        frontier = [self.point]
        while frontier:
            nxt = []
            for x in frontier:
                ux = trans[x]
                for s in self.gens:
                    y = s[x]
                    if y not in trans:
                        trans[y] = _mul(ux, s)
                        nxt.append(y)
            frontier = nxt
        self.transversal = trans
        self.inverses = {}

    def inv_rep(self, x: int) -> tuple:
        r = self.inverses.get(x)
        if r is None:
            r = self.inverses[x] = _inv(self.transversal[x])
        return r


def _sift(levels: list[_Level], g: tuple, start: int = 0) -> tuple[tuple, int]:
    for k in range(start, len(levels)):
        lev = levels[k]
        x = g[lev.point]
        if x not in lev.transversal:
            return g, k
        if x != lev.point:
            g = _mul(g, lev.inv_rep(x))
    return g, len(levels)


def _schreier_sims(gens: list[tuple], n: int, base: Sequence[int]) -> list[_Level]:
    base = list(dict.fromkeys(base))
    gens = [g for g in gens if not _is_id(g)]
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = [_Level(b) for b in base]
    for k, lev in enumerate(levels):
        lev.gens = [g for g in gens if all(g[b] == b for b in base[:k])]
        lev.rebuild(n)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        extended = False
        for x in list(lev.transversal):
            ux = lev.transversal[x]
            for s in lev.gens:
                y = s[x]
                h = _mul(_mul(ux, s), lev.inv_rep(y))
                if _is_id(h):
                    continue
                residue, j = _sift(levels, h, i + 1)
                if _is_id(residue):
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(residue)))
                for lv in levels[i + 1 : j + 1]:
                    lv.gens.append(residue)
                    lv.rebuild(n)
                i = j
                extended = True
                break
            if extended:
                break
        if not extended:
            i -= 1
    return levels


class PermGroup:
    """A permutation group on ``range(degree)``.

    ``order``, ``__contains__`` and enumeration run off a stabilizer chain.
    The generator list is deduplicated and sorted so equal inputs give equal
    objects regardless of generator order.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None,
                 base: Sequence[int] = ()):
        gens = sorted({tuple(g) for g in generators})
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators have mismatched degree")
        self.degree = degree
        self.generators = tuple(Permutation(g) for g in gens if not _is_id(g))
        self._levels = _schreier_sims([tuple(g) for g in self.generators], degree, base)

    @classmethod
    def from_strong_generators(cls, base: Sequence[int], generators: Iterable[Sequence[int]],
                               degree: int) -> PermGroup:
        """Build the chain directly from a known base and strong generating set.

        Used for automorphism groups whose search already produced an SGS;
        no Schreier generators are sifted.
        """
        self = cls.__new__(cls)
        gens = sorted({tuple(g) for g in generators if not _is_id(tuple(g))})
        self.degree = degree
        self.generators = tuple(Permutation(g) for g in gens)
        levels = []
        for k, b in enumerate(base):
            lev = _Level(b, [g for g in gens if all(g[c] == c for c in base[:k])])
            lev.rebuild(degree)
            levels.append(lev)
        if any(all(g[c] == c for c in base) for g in gens):
            raise ValueError("a strong generator fixes the whole base")
        self._levels = levels
        return self

    # -- structure ---------------------------------------------------------
    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lev.point for lev in self._levels)

    @property
    def basic_orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(lev.transversal) for lev in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen = dict.fromkeys(g for lev in self._levels for g in lev.gens)
        return tuple(Permutation(g) for g in seen)

    def order(self) -> int:
        return prod(self.basic_orbit_sizes)

    def __len__(self):
        return self.order()

    def __contains__(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        residue, k = _sift(self._levels, g)
        return k == len(self._levels) and _is_id(residue)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(g in other for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    __hash__ = None

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products of transversal elements."""
        reps = [list(lev.transversal.values()) for lev in reversed(self._levels)]
        for combo in product(*reps):
            g = tuple(range(self.degree))
            for u in combo:
                g = _mul(g, u)
            yield Permutation(g)

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in self.generators:
                    z = g[y]
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done = set()
        out = []
        for x in range(self.degree):
            if x not in done:
                orb = self.orbit(x)
                done.update(orb)
                out.append(orb)
        return out

    def with_base(self, prefix: Sequence[int]) -> PermGroup:
        """Same group, with a stabilizer chain whose base starts with ``prefix``."""
        g = PermGroup.__new__(PermGroup)
        g.degree = self.degree
        g.generators = self.generators
        g._levels = _schreier_sims([tuple(s) for s in self.strong_generators], self.degree, prefix)
        return g

    def pointwise_stabilizer(self, points: Sequence[int]) -> PermGroup:
        chain = self.with_base(points)
        k = len(points)
        gens = [s for lev in chain._levels[k:] for s in lev.gens]
        return PermGroup.from_strong_generators(
            chain.base[k:], gens, self.degree) if gens else PermGroup([], self.degree)

    def stabilizer(self, point: int) -> PermGroup:
        return self.pointwise_stabilizer([point])

    def is_abelian(self) -> bool:
        gens = [tuple(g) for g in self.generators]
        return all(_mul(g, h) == _mul(h, g) for k, g in enumerate(gens) for h in gens[k + 1:])

    def is_cyclic(self) -> bool:
        """Abelian groups are cyclic iff the lcm of generator orders (their
        exponent) equals the group order."""
        if not self.is_abelian():
            return False
        return lcm(1, *(g.order() for g in self.generators)) == self.order()

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()}, ngens={len(self.generators)})"
