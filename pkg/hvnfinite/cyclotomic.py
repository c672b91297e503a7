"""Exact arithmetic in cyclotomic fields.

A `Cyclotomic` of order ``e`` is a rational combination of the powers of a
primitive ``e``-th root of unity ``ζ``, stored in the power basis
``1, ζ, …, ζ^(φ(e)-1)`` after reduction modulo the cyclotomic polynomial.
Character values of a group of exponent ``e`` all live in this form.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from sympy import cyclotomic_poly, mobius, totient

Scalar = int | Fraction


@lru_cache(maxsize=None)
def _cyclotomic_coefficients(order: int) -> tuple[int, ...]:
    """Coefficients of Φ_order from the constant term up (monic)."""
    poly = cyclotomic_poly(order, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _normalized_trace(order: int, power: int) -> Fraction:
    """Trace of ζ_order^power divided by the field degree (a Ramanujan sum ratio)."""
    m = order // math.gcd(power, order)
    return Fraction(int(mobius(m)), int(totient(m)))


def _reduce(order: int, powers: Iterable[Scalar]) -> tuple[Fraction, ...]:
    folded = [Fraction(0)] * order
    for k, c in enumerate(powers):
        if c:
            folded[k % order] += c
    phi = _cyclotomic_coefficients(order)
    degree = len(phi) - 1
    for top in range(order - 1, degree - 1, -1):
        c = folded[top]
        if not c:
            continue
        shift = top - degree
        for i in range(degree + 1):
            folded[shift + i] -= c * phi[i]
    return tuple(folded[:degree])


class Cyclotomic:
    """An element of the cyclotomic field Q(ζ_order), in canonical form."""

    def __init__(self, order: int, coeffs: Iterable[Scalar]) -> None:
        """Build from coefficients over the powers ``ζ^0, ζ^1, …`` (any length)."""
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        self._order = order
        self._coeffs = _reduce(order, coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def rational(cls, value: Scalar, order: int = 1) -> Cyclotomic:
        return cls(order, [value])

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> Cyclotomic:
        """Return ``ζ_order^power``."""
        powers = [0] * order
        powers[power % order] = 1
        return cls(order, powers)

    def lift(self, order: int) -> Cyclotomic:
        """Re-express in Q(ζ_order); ``order`` must be a multiple of this order."""
        if order % self._order != 0:
            raise ValueError(f"Cannot lift order {self._order} to order {order}")
        if order == self._order:
            return self
        step = order // self._order
        powers = [Fraction(0)] * order
        for k, c in enumerate(self._coeffs):
            powers[k * step] = c
        return Cyclotomic(order, powers)

    def _coerce(self, other: object) -> tuple[Cyclotomic, Cyclotomic] | None:
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.rational(other, self._order)
        if isinstance(other, Cyclotomic):
            if other._order == self._order:
                return self, other
            common = math.lcm(self._order, other._order)
            return self.lift(common), other.lift(common)
        return None

    def __add__(self, other: object) -> Cyclotomic:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a._order, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self._order, [-c for c in self._coeffs])

    def __sub__(self, other: object) -> Cyclotomic:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a._order, [x - y for x, y in zip(a._coeffs, b._coeffs)])

    def __rsub__(self, other: object) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: object) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self._order, [c * other for c in self._coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        product = [Fraction(0)] * (2 * len(a._coeffs))
        for i, x in enumerate(a._coeffs):
            if not x:
                continue
            for j, y in enumerate(b._coeffs):
                if y:
                    product[i + j] += x * y
        return Cyclotomic(a._order, product)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Cyclotomic division by zero")
            return Cyclotomic(self._order, [c / other for c in self._coeffs])
        if isinstance(other, Cyclotomic) and other.is_rational:
            return self / other.to_fraction()
        return NotImplemented

    def __pow__(self, exponent: int) -> Cyclotomic:
        if exponent < 0:
            raise ValueError("Negative powers are not supported")
        result = Cyclotomic.rational(1, self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois(self, a: int) -> Cyclotomic:
        """Apply the field automorphism ζ ↦ ζ^a (``a`` coprime to the order)."""
        if math.gcd(a, self._order) != 1:
            raise ValueError(f"{a} is not a unit modulo {self._order}")
        powers = [Fraction(0)] * self._order
        for k, c in enumerate(self._coeffs):
            powers[(a * k) % self._order] += c
        return Cyclotomic(self._order, powers)

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate, i.e. ζ ↦ ζ⁻¹."""
        if self._order == 1:
            return self
        return self.galois(self._order - 1)

    @property
    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    @property
    def is_integral(self) -> bool:
        """Whether every power-basis coefficient is an integer (algebraic integer test)."""
        return all(c.denominator == 1 for c in self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def to_complex(self) -> complex:
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * k / self._order) for k, c in enumerate(self._coeffs)),
            0j,
        )

    @cached_property
    def _hash_key(self) -> Fraction:
        # Normalized trace is independent of the field the value is written in
        return sum(
            (c * _normalized_trace(self._order, k) for k, c in enumerate(self._coeffs)),
            Fraction(0),
        )

    def __eq__(self, other: object) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._coeffs == b._coeffs

    def __hash__(self) -> int:
        return hash(self._hash_key)

    def sort_key(self) -> tuple[Fraction, ...]:
        """Total order on values of a fixed order: lexicographic on coefficients."""
        return self._coeffs

    def __repr__(self) -> str:
        return f"Cyclotomic({self._order}, {[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.to_fraction())
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = f"z{self._order}" if k == 1 else f"z{self._order}^{k}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ")


def field_degree(order: int) -> int:
    """Degree φ(order) of Q(ζ_order) over Q."""
    return int(totient(order))


def galois_units(order: int) -> list[int]:
    """The units modulo ``order`` in increasing order (the Galois group of Q(ζ_order))."""
    if order == 1:
        return [1]
    return [a for a in range(1, order) if math.gcd(a, order) == 1]
