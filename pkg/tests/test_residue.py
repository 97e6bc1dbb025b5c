from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_sqrt, brute_unit_order

from metabicay.errors import InvalidModulus, NoSuchOrder, NotAUnit
from metabicay.residue import (
    PrimePowerModulus,
    Residue,
    element_of_order,
    inverse,
    least_primitive_root,
    sqrt_unit,
    unit_order,
)

SMALL = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2), (11, 1), (13, 2)]
moduli = st.sampled_from(SMALL).map(lambda t: PrimePowerModulus(*t))


@pytest.mark.parametrize("p, alpha", [(2, 3), (9, 1), (1, 2), (3, 0)])
def test_rejects_bad_modulus(p, alpha):
    with pytest.raises(InvalidModulus):
        PrimePowerModulus(p, alpha)


def test_modulus_too_large():
    with pytest.raises(InvalidModulus):
        PrimePowerModulus(3, 40)


def test_unit_group_order():
    assert PrimePowerModulus(5, 2).unit_group_order == 20
    assert PrimePowerModulus(3, 3).unit_group_order == 18


def test_inverse_of_non_unit():
    with pytest.raises(NotAUnit):
        inverse(Residue(6, PrimePowerModulus(3, 2)))


def test_mixed_moduli_rejected():
    with pytest.raises(InvalidModulus):
        Residue(1, PrimePowerModulus(3, 2)) + Residue(1, PrimePowerModulus(5, 1))


@given(moduli, st.integers(), st.integers())
def test_ring_arithmetic_matches_int(mod, x, y):
    n = mod.value
    X, Y = Residue(x, mod), Residue(y, mod)
    assert (X + Y).value == (x + y) % n
    assert (X - Y).value == (x - y) % n
    assert (X * Y).value == (x * y) % n
    assert (-X).value == (-x) % n


@given(moduli, st.integers(min_value=1))
def test_inverse_and_negative_powers(mod, x):
    X = Residue(x, mod)
    if not X.is_unit:
        return
    assert (X * inverse(X)).value == 1
    assert X**-3 * X**3 == Residue(1, mod)


@given(moduli, st.integers(min_value=1))
def test_sqrt_matches_exhaustive_search(mod, x):
    X = Residue(x, mod)
    if not X.is_unit:
        return
    assert {r.value for r in sqrt_unit(X)} == brute_sqrt(X.value, mod.value)


def test_sqrt_exhaustive_small():
    for p, alpha in SMALL:
        mod = PrimePowerModulus(p, alpha)
        for v in range(1, mod.value):
            if v % p:
                got = sqrt_unit(Residue(v, mod))
                assert {r.value for r in got} == brute_sqrt(v, mod.value)
                if got:
                    assert got[0].value <= (mod.value - 1) // 2 < got[1].value


def test_sqrt_of_non_unit_rejected():
    with pytest.raises(NotAUnit):
        sqrt_unit(Residue(3, PrimePowerModulus(3, 2)))


def test_unit_order_exhaustive():
    for p, alpha in SMALL:
        mod = PrimePowerModulus(p, alpha)
        for v in range(1, mod.value):
            if v % p:
                assert unit_order(Residue(v, mod)) == brute_unit_order(v, mod.value)


def test_primitive_roots():
    # least generators of the unit groups, by direct order search
    assert least_primitive_root(PrimePowerModulus(3, 2)) == 2
    assert least_primitive_root(PrimePowerModulus(5, 2)) == 2
    assert least_primitive_root(PrimePowerModulus(7, 2)) == 3


def test_element_of_order():
    assert element_of_order(2, PrimePowerModulus(3, 2)).value == 8
    assert element_of_order(4, PrimePowerModulus(5, 2)).value == 7
    assert element_of_order(6, PrimePowerModulus(3, 2)).value == 2
    for k in (1, 2, 3, 6, 9, 18):
        assert unit_order(element_of_order(k, PrimePowerModulus(3, 3))) == k
    with pytest.raises(NoSuchOrder):
        element_of_order(4, PrimePowerModulus(3, 2))
