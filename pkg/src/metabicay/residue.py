"""Exact arithmetic in the ring Z_{p^alpha} and its unit group.

Values are plain Python integers reduced into ``[0, p^alpha)``.  The modulus
is capped below 2**63 so every instance stays well inside machine-word range
even though Python integers would not overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import factorint, isprime

from .errors import InvalidModulus, NotAUnit, NoSuchOrder

MAX_MODULUS = 2**63


@dataclass(frozen=True, order=True)
class PrimePowerModulus:
    """The modulus ``p**alpha`` for an odd prime ``p``."""

    p: int
    alpha: int

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidModulus(f"alpha must be >= 1, got {self.alpha}")
        if self.p < 3 or not isprime(self.p):
            raise InvalidModulus(f"p must be an odd prime, got {self.p}")
        if self.p**self.alpha >= MAX_MODULUS:
            raise InvalidModulus(f"{self.p}^{self.alpha} does not fit in 63 bits")

    @cached_property
    def value(self) -> int:
        return self.p**self.alpha

    @cached_property
    def unit_group_order(self) -> int:
        """Order of the unit group, (p-1) p^(alpha-1)."""
        return (self.p - 1) * self.p ** (self.alpha - 1)

    @cached_property
    def unit_group_primes(self) -> tuple[int, ...]:
        return tuple(sorted(factorint(self.unit_group_order)))

    def __call__(self, value: int) -> Residue:
        return Residue(value % self.value, self)

    def __str__(self):
        return f"{self.p}^{self.alpha}"


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z_{p^alpha}.  Arithmetic with plain ints is allowed."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            object.__setattr__(self, "value", self.value % self.modulus.value)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise InvalidModulus(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, v: int) -> Residue:
        return Residue(v % self.modulus.value, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        return self._new(pow(self.value, k, self.modulus.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"

    @property
    def is_unit(self) -> bool:
        return self.value % self.modulus.p != 0


def _require_unit(x: Residue) -> None:
    if not x.is_unit:
        raise NotAUnit(f"{x.value} is divisible by p={x.modulus.p}")


def inverse(x: Residue) -> Residue:
    _require_unit(x)
    return Residue(pow(x.value, -1, x.modulus.value), x.modulus)


def unit_order(x: Residue) -> int:
    """Multiplicative order of a unit, found by stripping prime factors off
    the unit-group order."""
    _require_unit(x)
    n = x.modulus.value
    d = x.modulus.unit_group_order
    for q in x.modulus.unit_group_primes:
        while d % q == 0 and pow(x.value, d // q, n) == 1:
            d //= q
    return d


@lru_cache(maxsize=None)
def least_primitive_root(m: PrimePowerModulus) -> int:
    phi = m.unit_group_order
    for g in range(2, m.value):
        if g % m.p and all(pow(g, phi // q, m.value) != 1 for q in m.unit_group_primes):
            return g
    raise AssertionError(f"no primitive root modulo {m}")  # unit group of odd p^a is cyclic


def element_of_order(k: int, m: PrimePowerModulus) -> Residue:
    """Canonical element of order ``k``: ``g^(phi/k)`` with ``g`` the least
    primitive root modulo ``p^alpha``."""
    phi = m.unit_group_order
    if k < 1 or phi % k:
        raise NoSuchOrder(f"{k} does not divide the unit group order {phi} modulo {m}")
    g = least_primitive_root(m)
    return Residue(pow(g, phi // k, m.value), m)


def _tonelli_shanks(a: int, p: int) -> int | None:
    """Square root of ``a`` modulo the odd prime ``p``, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        return pow(a, (p + 1) // 4, p)
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (s - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        s = i
    return r


def sqrt_unit(x: Residue) -> tuple[Residue, ...]:
    """Square roots of a unit modulo ``p^alpha``.

    Returns ``()`` when ``x`` is a non-residue, otherwise the two roots
    ``(u, p^alpha - u)`` sorted by value.  The root modulo ``p`` comes from
    Tonelli-Shanks and is Hensel-lifted one power of ``p`` at a time.
    """
    _require_unit(x)
    p = x.modulus.p
    r = _tonelli_shanks(x.value, p)
    if r is None:
        return ()
    mod = p
    for _ in range(1, x.modulus.alpha):
        mod *= p
        # r^2 = x (mod mod/p); 2r is a unit, so one Newton step lifts it
        r = (r - (r * r - x.value) * pow(2 * r, -1, mod)) % mod
    u = Residue(r, x.modulus)
    return tuple(sorted({u, -u}))

