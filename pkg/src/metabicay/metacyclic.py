"""The split metacyclic p-group

    G(alpha, beta, gamma) = < a, b | a^(p^alpha) = b^(p^beta) = 1, b^-1 a b = a^(1 + p^gamma) >

with 0 < gamma < alpha <= beta + gamma.

Elements are kept in the normal form ``b^j a^i``.  Moving ``a^i`` past
``b^j`` gives ``a^i b^j = b^j a^(i r^j)`` with ``r = 1 + p^gamma``, which
yields the product rule used by :func:`multiply`.

Besides the element-level API there is an index-level API (``G.index(x)``,
``G.mul_table``) used by the graph code: element ``b^j a^i`` has index
``j * p^alpha + i``, so index order is the lexicographic normal-form order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    InvalidGroupParams,
    NoSuchOrder,
    NotGenerating,
    OrderViolated,
    ParamsMismatch,
    RelationViolated,
    TooLarge,
)
from .residue import PrimePowerModulus, element_of_order

ORDER_GUARD = 2**32
ENUMERATION_GUARD = 3**5
TABLE_LIMIT = 5**4  # largest order for which the dense multiplication table is built


def enumeration_guard() -> int:
    """Largest group order for which brute-force enumerations run."""
    return int(os.environ.get("METABICAY_ENUMERATION_GUARD", ENUMERATION_GUARD))


@dataclass(frozen=True, order=True)
class GroupParams:
    p: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if not 0 < self.gamma < self.alpha <= self.beta + self.gamma:
            raise InvalidGroupParams(
                f"need 0 < gamma < alpha <= beta + gamma, got "
                f"alpha={self.alpha}, beta={self.beta}, gamma={self.gamma}"
            )
        # validates p as an odd prime
        PrimePowerModulus(self.p, self.alpha)
        if self.p ** (self.alpha + self.beta) >= ORDER_GUARD:
            raise InvalidGroupParams(f"group order {self.p}^{self.alpha + self.beta} exceeds 2^32")

    def __str__(self):
        return f"G_{{{self.alpha},{self.beta},{self.gamma}}}({self.p})"

    @cached_property
    def pa(self) -> int:
        return self.p**self.alpha

    @cached_property
    def pb(self) -> int:
        return self.p**self.beta

    @cached_property
    def order(self) -> int:
        return self.pa * self.pb

    @cached_property
    def r(self) -> int:
        """The twisting unit 1 + p^gamma modulo p^alpha."""
        return (1 + self.p**self.gamma) % self.pa

    @cached_property
    def a_modulus(self) -> PrimePowerModulus:
        return PrimePowerModulus(self.p, self.alpha)

    @cached_property
    def _r_powers(self) -> tuple[int, ...]:
        # r has order p^(alpha-gamma) <= p^beta, so r^j only depends on j mod p^beta
        return tuple(pow(self.r, j, self.pa) for j in range(self.pb))

    def r_pow(self, j: int) -> int:
        return self._r_powers[j % self.pb]

    def elem(self, j: int, i: int) -> GroupElem:
        return GroupElem(j % self.pb, i % self.pa, self)

    @property
    def identity(self) -> GroupElem:
        return GroupElem(0, 0, self)

    @property
    def a(self) -> GroupElem:
        return GroupElem(0, 1 % self.pa, self)

    @property
    def b(self) -> GroupElem:
        return GroupElem(1 % self.pb, 0, self)

    def elements(self) -> Iterator[GroupElem]:
        """All elements in lexicographic normal-form order."""
        for j in range(self.pb):
            for i in range(self.pa):
                yield GroupElem(j, i, self)

    # index-level helpers
    def index(self, x: GroupElem) -> int:
        return x.j * self.pa + x.i

    def from_index(self, idx: int) -> GroupElem:
        j, i = divmod(idx, self.pa)
        return GroupElem(j, i, self)

    @cached_property
    def mul_table(self) -> np.ndarray:
        """``mul_table[x, y]`` is the index of ``x*y``."""
        n = self.order
        if n > TABLE_LIMIT:
            raise TooLarge(f"no dense multiplication table for |G| = {n} > {TABLE_LIMIT}")
        js, is_ = np.divmod(np.arange(n, dtype=np.int64), self.pa)
        rp = np.array(self._r_powers, dtype=np.int64)
        j = (js[:, None] + js[None, :]) % self.pb
        i = (is_[:, None] * rp[js][None, :] + is_[None, :]) % self.pa
        table = j * self.pa + i
        table.setflags(write=False)
        return table

    @cached_property
    def inv_table(self) -> np.ndarray:
        # the identity has index 0, so each row's argmin is the inverse
        inv = self.mul_table.argmin(axis=1)
        inv.setflags(write=False)
        return inv


@dataclass(frozen=True, order=True)
class GroupElem:
    """The element ``b^j a^i`` of ``group``."""

    j: int
    i: int
    group: GroupParams

    def __mul__(self, other: GroupElem) -> GroupElem:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupElem:
        if k < 0:
            return power(self.inverse(), -k)
        return power(self, k)

    def inverse(self) -> GroupElem:
        G = self.group
        # (b^j a^i)^-1 = a^-i b^-j = b^-j a^(-i r^-j)
        return GroupElem(-self.j % G.pb, (-self.i * G.r_pow(-self.j)) % G.pa, G)

    def order(self) -> int:
        return element_order(self)

    @property
    def is_identity(self) -> bool:
        return self.j == 0 and self.i == 0

    def __repr__(self):
        return f"b^{self.j} a^{self.i}"


def multiply(x: GroupElem, y: GroupElem, G: GroupParams | None = None) -> GroupElem:
    G = G or x.group
    if x.group != G or y.group != G:
        raise ParamsMismatch(f"cannot multiply elements of {x.group} and {y.group} in {G}")
    return GroupElem((x.j + y.j) % G.pb, (x.i * G.r_pow(y.j) + y.i) % G.pa, G)


def geometric_sum(q: int, k: int, mod: int) -> int:
    """1 + q + ... + q^(k-1) modulo ``mod`` in O(log k) steps."""
    total, q_pow = 0, 1  # sum of the first `done` terms, and q^done
    block_sum, block_pow = 1 % mod, q % mod  # sum and power for a block of length 2^t
    while k:
        if k & 1:
            total = (total + q_pow * block_sum) % mod
            q_pow = q_pow * block_pow % mod
        block_sum = block_sum * (1 + block_pow) % mod
        block_pow = block_pow * block_pow % mod
        k >>= 1
    return total


def power(x: GroupElem, k: int, G: GroupParams | None = None) -> GroupElem:
    """``x^k`` via the closed form b^(kj) a^(i * sum_{t<k} r^(tj))."""
    G = G or x.group
    if k < 0:
        raise ValueError("k must be non-negative")
    s = geometric_sum(G.r_pow(x.j), k, G.pa)
    return GroupElem(k * x.j % G.pb, x.i * s % G.pa, G)


def element_order(x: GroupElem, G: GroupParams | None = None) -> int:
    G = G or x.group
    d = 1
    for _ in range(G.alpha + G.beta + 1):
        if power(x, d, G).is_identity:
            return d
        d *= G.p
    raise AssertionError("element order exceeds the group exponent")


def generated_subgroup(S: Iterable[GroupElem], G: GroupParams | None = None) -> frozenset[GroupElem]:
    """Closure of ``S`` under multiplication (orbit of the identity under
    right multiplication by the generators)."""
    gens = list(S)
    if not gens:
        raise ValueError("need at least one generator")
    G = G or gens[0].group
    if G.order > TABLE_LIMIT:
        seen_el = {G.identity}
        frontier_el = [G.identity]
        while frontier_el:
            nxt_el = []
            for x in frontier_el:
                for g in gens:
                    y = multiply(x, g, G)
                    if y not in seen_el:
                        seen_el.add(y)
                        nxt_el.append(y)
            frontier_el = nxt_el
        return frozenset(seen_el)
    table = G.mul_table
    gidx = [G.index(g) for g in gens]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gidx:
                y = int(row[g])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(G.from_index(x) for x in seen)


def generates(S: Iterable[GroupElem], G: GroupParams | None = None) -> bool:
    S = list(S)
    G = G or S[0].group
    return len(generated_subgroup(S, G)) == G.order


@dataclass(frozen=True)
class GroupAut:
    """Automorphism of G given by the images of ``a`` and ``b``.

    Maps act on the right and compose left to right: ``(s * t)(x) == t(s(x))``.
    """

    image_a: GroupElem
    image_b: GroupElem

    @property
    def group(self) -> GroupParams:
        return self.image_a.group

    def __call__(self, x: GroupElem) -> GroupElem:
        return self.image_b**x.j * self.image_a**x.i

    @cached_property
    def table(self) -> np.ndarray:
        """Index-level image table: ``table[G.index(x)] == G.index(self(x))``."""
        G = self.group
        pa_idx = [G.index(self.image_a**i) for i in range(G.pa)]
        pb_idx = [G.index(self.image_b**j) for j in range(G.pb)]
        t = G.mul_table[np.array(pb_idx)[:, None], np.array(pa_idx)[None, :]].reshape(-1)
        t.setflags(write=False)
        return t

    def __mul__(self, other: GroupAut) -> GroupAut:
        return GroupAut(other(self.image_a), other(self.image_b))

    def __pow__(self, k: int) -> GroupAut:
        result = identity_aut(self.group)
        for _ in range(k % self.order()):
            result = result * self
        return result

    def inverse(self) -> GroupAut:
        G = self.group
        inv = np.empty(G.order, dtype=np.int64)
        inv[self.table] = np.arange(G.order)
        return GroupAut(G.from_index(int(inv[G.index(G.a)])), G.from_index(int(inv[G.index(G.b)])))

    def order(self) -> int:
        G = self.group
        t = self.table
        cur = t.copy()
        k = 1
        ident = np.arange(G.order)
        while not np.array_equal(cur, ident):
            cur = t[cur]
            k += 1
        return k

    @property
    def is_identity(self) -> bool:
        G = self.group
        return self.image_a == G.a and self.image_b == G.b

    def __repr__(self):
        return f"(a -> {self.image_a!r}, b -> {self.image_b!r})"


def identity_aut(G: GroupParams) -> GroupAut:
    return GroupAut(G.a, G.b)


def _relation_holds(x: GroupElem, y: GroupElem, G: GroupParams) -> bool:
    return y.inverse() * x * y == power(x, G.r)


def aut_from_images(image_a: GroupElem, image_b: GroupElem, G: GroupParams | None = None) -> GroupAut:
    """Validate that ``a -> image_a, b -> image_b`` extends to an automorphism.

    The images must have the exact orders of ``a`` and ``b``, satisfy the
    defining relation, and generate the group.
    """
    G = G or image_a.group
    if image_a.group != G or image_b.group != G:
        raise ParamsMismatch("images live in a different group")
    if element_order(image_a, G) != G.pa:
        raise OrderViolated(f"image of a has order {element_order(image_a, G)}, expected {G.pa}")
    if element_order(image_b, G) != G.pb:
        raise OrderViolated(f"image of b has order {element_order(image_b, G)}, expected {G.pb}")
    if not _relation_holds(image_a, image_b, G):
        raise RelationViolated("image_b^-1 image_a image_b != image_a^(1+p^gamma)")
    if not generates([image_a, image_b], G):
        raise NotGenerating("images of a and b do not generate the group")
    return GroupAut(image_a, image_b)


def enumerate_automorphisms(G: GroupParams, guard: int | None = None) -> list[GroupAut]:
    """Every automorphism of G, sorted by (image_a, image_b) normal form."""
    guard = enumeration_guard() if guard is None else guard
    if G.order > guard:
        raise TooLarge(f"|G| = {G.order} exceeds the enumeration guard {guard}")
    order_of = {x: element_order(x, G) for x in G.elements()}
    xs = [x for x in G.elements() if order_of[x] == G.pa]
    ys = [y for y in G.elements() if order_of[y] == G.pb]
    auts = []
    for x, y in product(xs, ys):
        if _relation_holds(x, y, G) and generates([x, y], G):
            auts.append(GroupAut(x, y))
    return auts


def aut_order_formula(G: GroupParams) -> int:
    """(p-1) p^(min(alpha,beta) + min(beta,gamma) + beta + gamma - 1)."""
    a, b, c = G.alpha, G.beta, G.gamma
    return (G.p - 1) * G.p ** (min(a, b) + min(b, c) + b + c - 1)


def canonical_theta(k: int, G: GroupParams) -> GroupAut:
    """The automorphism ``a -> a^e, b -> b`` with ``e`` the canonical unit of
    order ``k`` (``k`` must divide p - 1)."""
    if k < 2 or (G.p - 1) % k:
        raise NoSuchOrder(f"k={k} must satisfy k >= 2 and k | p-1 = {G.p - 1}")
    e = element_of_order(k, G.a_modulus)
    return GroupAut(G.a ** e.value, G.b)
