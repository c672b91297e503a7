import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvnfinite.cyclotomic import Cyclotomic, field_degree, galois_units


def zeta(order, power=1):
    return Cyclotomic.root_of_unity(order, power)


def test_roots_of_unity_satisfy_their_relations():
    assert zeta(4) ** 2 == -1
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(5) ** 5 == 1
    assert (zeta(6) ** 3).is_rational


def test_values_compare_across_fields():
    assert zeta(2) == zeta(4, 2)
    assert zeta(3) == zeta(12, 4)
    assert hash(zeta(2)) == hash(zeta(4, 2))
    assert hash(Cyclotomic.rational(Fraction(1, 3), 12)) == hash(Cyclotomic.rational(Fraction(1, 3)))
    assert zeta(4) != zeta(4, 3)


def test_conjugate_inverts_roots():
    assert zeta(4).conjugate() == zeta(4, 3)
    assert zeta(8, 3).conjugate() * zeta(8, 3) == 1
    assert Cyclotomic.rational(7).conjugate() == 7


def test_rational_queries():
    half = Cyclotomic.rational(Fraction(1, 2), 6)
    assert half.is_rational
    assert not half.is_integral
    assert half.to_fraction() == Fraction(1, 2)
    assert str(half) == "1/2"
    with pytest.raises(ValueError):
        zeta(3).to_fraction()


def test_string_form_of_irrational_value():
    assert str(zeta(4)) == "z4"
    assert str(-zeta(4)) == "-z4"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        zeta(3) / 0


def test_lift_needs_a_multiple():
    with pytest.raises(ValueError):
        zeta(3).lift(4)


def test_galois_needs_a_unit():
    with pytest.raises(ValueError):
        zeta(6).galois(2)


def test_to_complex():
    assert abs(zeta(4).to_complex() - 1j) < 1e-12
    assert abs(zeta(3).to_complex() - cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_field_data():
    assert field_degree(12) == 4
    assert field_degree(7) == 6
    assert galois_units(8) == [1, 3, 5, 7]
    assert galois_units(1) == [1]


coefficients = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=12
)


@settings(max_examples=40, deadline=None)
@given(coefficients, coefficients, st.sampled_from([1, 5, 7, 11]))
def test_galois_action_is_a_ring_homomorphism(a, b, unit):
    x, y = Cyclotomic(12, a), Cyclotomic(12, b)
    assert (x * y).galois(unit) == x.galois(unit) * y.galois(unit)
    assert (x + y).galois(unit) == x.galois(unit) + y.galois(unit)


@settings(max_examples=40, deadline=None)
@given(coefficients, coefficients)
def test_multiplication_matches_complex_numbers(a, b):
    x, y = Cyclotomic(8, a), Cyclotomic(8, b)
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-6


@settings(max_examples=40, deadline=None)
@given(coefficients)
def test_equal_values_hash_equally_after_lifting(a):
    x = Cyclotomic(6, a)
    assert x.lift(12) == x
    assert hash(x.lift(12)) == hash(x)
