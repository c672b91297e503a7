"""Exact character theory of finite groups.

Character tables are computed with Dixon's method: the class algebra is split
over a prime field GF(p) with ``p ≡ 1 (mod exponent)``, and the resulting
modular characters are lifted to exact cyclotomic values by recovering the
eigenvalue multiplicities of every class representative.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Protocol, Sequence

from sympy import GF, Poly, Symbol, isprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from hvnfinite.cyclotomic import Cyclotomic, galois_units
from hvnfinite.errors import GroupError, GroupMismatch, InvariantViolation, OrderCapExceeded
from hvnfinite.group_core import (
    ConjugacyClass,
    FiniteGroup,
    Subgroup,
    class_index,
    class_inverse_map,
    conjugacy_classes,
    is_normal_subgroup,
)
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)


class PermutationAction(Protocol):
    """Anything carrying a group and one permutation per group element."""

    group: FiniteGroup
    action: Sequence[Sequence[int]]


@dataclass(frozen=True)
class ClassFunction:
    """A function constant on conjugacy classes, one value per class."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self) -> None:
        expected = len(conjugacy_classes(self.group))
        if len(self.values) != expected:
            raise GroupError(
                f"Class function has {len(self.values)} values, expected {expected}"
            )

    def _check_group(self, other: ClassFunction) -> None:
        if other.group != self.group:
            raise GroupMismatch("Class functions live on different groups")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check_group(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        self._check_group(other)
        return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def conjugate(self) -> ClassFunction:
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    @property
    def degree(self) -> Cyclotomic:
        """Value at the identity."""
        return self.values[0]

    def at(self, element: int) -> Cyclotomic:
        return self.values[class_index(self.group)[element]]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """The irreducible characters of a finite group.

    Attributes:
        group: the group
        classes: conjugacy classes in canonical order (identity class first)
        rows: ``rows[i][k]`` is the value of irrep ``i`` on class ``k``
        exponent: the common order of every cyclotomic value
        prime: the prime the table was split over
    """

    group: FiniteGroup
    classes: tuple[ConjugacyClass, ...]
    rows: tuple[tuple[Cyclotomic, ...], ...]
    exponent: int
    prime: int

    @property
    def size(self) -> int:
        return len(self.rows)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(row[0].to_fraction()) for row in self.rows)

    @cached_property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def character(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.rows[i])

    def value(self, i: int, element: int) -> Cyclotomic:
        return self.rows[i][class_index(self.group)[element]]

    def _body(self) -> dict:
        return {
            "group_order": self.group.order,
            "group_hash": self.group.content_hash,
            "root_order": self.exponent,
            "class_sizes": list(self.class_sizes),
            "class_representatives": [c.representative for c in self.classes],
            "degrees": list(self.degrees),
            "characters": [
                [[int(c) for c in value.coeffs] for value in row] for row in self.rows
            ],
        }

    @cached_property
    def content_hash(self) -> str:
        """SHA-256 of the canonical JSON export (without the hash itself)."""
        payload = json.dumps(self._body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def export(self) -> dict:
        """JSON-compatible export; coefficient vectors are over ζ_root_order powers."""
        return {**self._body(), "content_hash": self.content_hash}

    def __repr__(self) -> str:
        return f"CharacterTable(order={self.group.order}, degrees={list(self.degrees)})"


# ---------------------------------------------------------------------------
# Dixon's method
# ---------------------------------------------------------------------------


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime ``p ≡ 1 (mod exponent)`` with ``p > 2·√order``."""
    k = 1
    while True:
        p = k * exponent + 1
        if p * p > 4 * order and isprime(p):
            return p
        k += 1


def _splitting_prime(exponent: int, bound: int) -> int:
    k = 1
    while True:
        p = k * exponent + 1
        if p > bound and isprime(p):
            return p
        k += 1


def class_structure_constants(group: FiniteGroup) -> list[list[list[int]]]:
    """Return ``a[r][s][t] = #{x ∈ C_r : x⁻¹·z_t ∈ C_s}`` for class representatives ``z_t``."""
    positions = class_index(group)
    classes = conjugacy_classes(group)
    c = len(classes)
    a = [[[0] * c for _ in range(c)] for _ in range(c)]
    for t, cls in enumerate(classes):
        z = cls.representative
        for x in group.elements:
            s = positions[group.mul(group.inv(x), z)]
            a[positions[x]][s][t] += 1
    return a


def _eigenvalues(matrix: DomainMatrix, p: int) -> list[int]:
    coefficients = [int(c) % p for c in matrix.charpoly()]
    poly = Poly(coefficients, Symbol("x"), modulus=p)
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() != 1:
            raise InvariantViolation(f"Class matrix does not split over GF({p})")
        lead, constant = (int(c) % p for c in factor.all_coeffs())
        roots.append((-constant * pow(lead, -1, p)) % p)
    return sorted(set(roots))


def _common_eigenvectors(constants: list[list[list[int]]], p: int) -> list[list[int]]:
    """Split GF(p)^c into the one-dimensional common eigenspaces of the class matrices."""
    field = GF(p, symmetric=False)
    c = len(constants)
    spaces = [DomainMatrix.eye(c, field)]
    for r in range(1, c):
        if all(space.shape[0] == 1 for space in spaces):
            break
        matrix = DomainMatrix(
            [[field(constants[r][s][t]) for s in range(c)] for t in range(c)],
            (c, c),
            field,
        )
        refined = []
        for space in spaces:
            dim = space.shape[0]
            if dim == 1:
                refined.append(space)
                continue
            _, pivots = space.rref()
            restricted = (space * matrix).extract(list(range(dim)), list(pivots))
            for eigenvalue in _eigenvalues(restricted, p):
                shifted = restricted - DomainMatrix.diag([field(eigenvalue)] * dim, field)
                left = shifted.transpose().nullspace()
                refined.append((left * space).rref()[0])
        spaces = refined
    if len(spaces) != c or any(space.shape[0] != 1 for space in spaces):
        raise InvariantViolation("Class algebra did not split into one-dimensional eigenspaces")
    return [[int(x) % p for x in space.to_list()[0]] for space in spaces]


def _lift_row(
    group: FiniteGroup,
    classes: Sequence[ConjugacyClass],
    modular: Sequence[int],
    degree: int,
    p: int,
    root: int,
) -> tuple[Cyclotomic, ...]:
    """Recover exact values from a modular character via eigenvalue multiplicities."""
    e = group.exponent
    positions = class_index(group)
    values = []
    for cls in classes:
        g = cls.representative
        o = group.element_orders[g]
        z = pow(root, e // o, p)
        power_classes = []
        x = 0
        for _ in range(o):
            power_classes.append(positions[x])
            x = group.mul(x, g)
        inv_o = pow(o, -1, p)
        powers = [0] * e
        total = 0
        for j in range(o):
            z_inv_j = pow(z, (o - j) % o, p)
            m = inv_o * sum(
                modular[power_classes[k]] * pow(z_inv_j, k, p) for k in range(o)
            ) % p
            if m > degree:
                raise InvariantViolation(
                    f"Eigenvalue multiplicity {m} exceeds degree {degree} on class {g}"
                )
            powers[j * (e // o)] += m
            total += m
        if total != degree:
            raise InvariantViolation(f"Eigenvalue multiplicities on class {g} do not sum to the degree")
        values.append(Cyclotomic(e, powers))
    return tuple(values)


@lru_cache(maxsize=128)
def character_table(group: FiniteGroup, limits: Limits | None = None) -> CharacterTable:
    """Compute the exact character table of a finite group.

    Rows are sorted with the trivial character first and then by
    (degree, coefficient vectors).

    Raises:
        OrderCapExceeded: the group order exceeds the table cap
        InvariantViolation: the modular splitting could not be lifted (a bug)
    """
    limits = resolve_limits(limits)
    if group.order > limits.table_order:
        raise OrderCapExceeded("Character table", group.order, limits.table_order)
    start = time.time()
    classes = conjugacy_classes(group)
    inverse = class_inverse_map(group)
    e = group.exponent
    p = dixon_prime(group.order, e)
    root = pow(int(primitive_root(p)), (p - 1) // e, p)

    rows = []
    for w in _common_eigenvectors(class_structure_constants(group), p):
        if w[0] == 0:
            raise InvariantViolation("Central character vanishes on the identity class")
        scale = pow(w[0], -1, p)
        w = [x * scale % p for x in w]
        norm = sum(
            w[k] * w[inverse[k]] * pow(cls.size, -1, p) for k, cls in enumerate(classes)
        ) % p
        square = group.order * pow(norm, -1, p) % p
        degree = sqrt_mod(square, p)
        if degree is None:
            raise InvariantViolation(f"Degree square {square} has no root modulo {p}")
        degree = min(degree, p - degree)
        modular = [degree * w[k] * pow(cls.size, -1, p) % p for k, cls in enumerate(classes)]
        rows.append(_lift_row(group, classes, modular, degree, p, root))

    trivial = tuple(Cyclotomic.rational(1, e) for _ in classes)
    rows.sort(key=lambda row: (row != trivial, int(row[0].to_fraction()), [v.sort_key() for v in row]))
    table = CharacterTable(group, classes, tuple(rows), e, p)

    if sum(d * d for d in table.degrees) != group.order:
        raise InvariantViolation(f"Degrees {table.degrees} do not square-sum to {group.order}")
    if not all(v.is_integral for row in rows for v in row):
        raise InvariantViolation("Character value with non-integral coefficients")
    logger.info(
        "Computed character table of order %d (%d classes, prime %d) in %.2f seconds",
        group.order,
        len(classes),
        p,
        time.time() - start,
    )
    return table


def verify_table(table: CharacterTable) -> list[str]:
    """Check row and column orthogonality exactly; return the failures found."""
    failures = []
    n = table.group.order
    sizes = table.class_sizes
    conjugated = [[v.conjugate() for v in row] for row in table.rows]
    for i, row in enumerate(table.rows):
        for j in range(i, table.size):
            total = sum(
                (sizes[k] * row[k] * conjugated[j][k] for k in range(len(sizes))),
                Cyclotomic.rational(0, table.exponent),
            )
            expected = n if i == j else 0
            if total != expected:
                failures.append(f"Row orthogonality fails for rows {i} and {j}")
    for s in range(len(sizes)):
        for t in range(s, len(sizes)):
            total = sum(
                (table.rows[i][s] * conjugated[i][t] for i in range(table.size)),
                Cyclotomic.rational(0, table.exponent),
            )
            expected = Fraction(n, sizes[s]) if s == t else 0
            if total != expected:
                failures.append(f"Column orthogonality fails for classes {s} and {t}")
    if table.rows and any(v != 1 for v in table.rows[0]):
        failures.append("Row 0 is not the trivial character")
    if sum(d * d for d in table.degrees) != n:
        failures.append("Squared degrees do not sum to the group order")
    return failures


# ---------------------------------------------------------------------------
# Operations on characters
# ---------------------------------------------------------------------------


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Return ``(1/|G|) Σ |C|·f(C)·conj(g(C))`` as an exact rational.

    Raises:
        GroupMismatch: the class functions live on different groups
        InvariantViolation: the result is not rational
    """
    if f.group != g.group:
        raise GroupMismatch("Class functions live on different groups")
    classes = conjugacy_classes(f.group)
    total = sum(
        (cls.size * a * b.conjugate() for cls, a, b in zip(classes, f.values, g.values)),
        Cyclotomic.rational(0),
    )
    result = total / f.group.order
    if not result.is_rational:
        raise InvariantViolation(f"Inner product {result} is not rational")
    return result.to_fraction()


@lru_cache(maxsize=128)
def _modular_image(table: CharacterTable) -> tuple[int, tuple[tuple[int, ...], ...]]:
    p = _splitting_prime(table.exponent, table.group.order)
    root = pow(int(primitive_root(p)), (p - 1) // table.exponent, p)
    powers = [pow(root, k, p) for k in range(table.exponent)]
    rows = tuple(
        tuple(
            sum(c.numerator * pow(c.denominator, -1, p) * powers[k] for k, c in enumerate(v.coeffs)) % p
            for v in row
        )
        for row in table.rows
    )
    return p, rows


@lru_cache(maxsize=65536)
def _tensor_decomposition(table: CharacterTable, i: int, j: int) -> tuple[tuple[int, int], ...]:
    p, rows = _modular_image(table)
    inverse = class_inverse_map(table.group)
    inv_order = pow(table.group.order, -1, p)
    sizes = table.class_sizes
    product = [rows[i][k] * rows[j][k] % p for k in range(len(sizes))]
    decomposition = {}
    for target, row in enumerate(rows):
        m = inv_order * sum(
            sizes[k] * product[k] * row[inverse[k]] for k in range(len(sizes))
        ) % p
        if m:
            decomposition[target] = m
    if sum(m * table.degrees[k] for k, m in decomposition.items()) != table.degrees[i] * table.degrees[j]:
        raise InvariantViolation(f"Tensor product of irreps {i} and {j} lost dimension")
    return tuple(decomposition.items())


def tensor_decompose(table: CharacterTable, i: int, j: int) -> dict[int, int]:
    """Decompose the product of irreps ``i`` and ``j`` into irreps.

    Multiplicities are integers in ``[0, |G|]``, so they are computed in a
    modular image of the table over a prime larger than the group order.

    Returns:
        dict: irrep index → positive multiplicity, in index order
    """
    return dict(_tensor_decomposition(table, i, j))


@lru_cache(maxsize=128)
def _row_lookup(table: CharacterTable) -> dict[tuple, int]:
    return {tuple(v.coeffs for v in row): i for i, row in enumerate(table.rows)}


def find_irrep(table: CharacterTable, row: Sequence[Cyclotomic]) -> int:
    try:
        return _row_lookup(table)[tuple(v.lift(table.exponent).coeffs for v in row)]
    except (KeyError, ValueError):
        raise InvariantViolation("Character is not a row of the table") from None


def conjugate_irrep(table: CharacterTable, i: int) -> int:
    """Index of the row whose values are the complex conjugates of row ``i``."""
    return find_irrep(table, [v.conjugate() for v in table.rows[i]])


def galois_orbits(table: CharacterTable) -> tuple[tuple[int, ...], ...]:
    """Partition the irreps into orbits of the Galois group of Q(ζ_exponent)."""
    units = galois_units(table.exponent)
    seen: set[int] = set()
    orbits = []
    for i, row in enumerate(table.rows):
        if i in seen:
            continue
        orbit = sorted({find_irrep(table, [v.galois(a) for v in row]) for a in units})
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return tuple(orbits)


def permutation_character(system: PermutationAction) -> ClassFunction:
    """Fixed-point counts of the class representatives."""
    group = system.group
    values = []
    for cls in conjugacy_classes(group):
        perm = system.action[cls.representative]
        fixed = sum(1 for x, y in enumerate(perm) if x == y)
        values.append(Cyclotomic.rational(fixed, group.exponent))
    return ClassFunction(group, tuple(values))


def regular_character(group: FiniteGroup) -> ClassFunction:
    classes = conjugacy_classes(group)
    return ClassFunction(
        group,
        tuple(
            Cyclotomic.rational(group.order if k == 0 else 0, group.exponent)
            for k in range(len(classes))
        ),
    )


def trivial_character(group: FiniteGroup) -> ClassFunction:
    classes = conjugacy_classes(group)
    return ClassFunction(group, tuple(Cyclotomic.rational(1, group.exponent) for _ in classes))


@lru_cache(maxsize=4096)
def kernel_of_irrep(table: CharacterTable, i: int) -> Subgroup:
    """Return ``{g : χ_i(g) = χ_i(1)}``, a normal subgroup."""
    degree = table.degrees[i]
    positions = class_index(table.group)
    row = table.rows[i]
    kernel = Subgroup(
        table.group,
        tuple(g for g in table.group.elements if row[positions[g]] == degree),
    )
    if not is_normal_subgroup(table.group, kernel):
        raise InvariantViolation(f"Kernel of irrep {i} is not normal")
    return kernel


def _at_least_minus_one(value: Cyclotomic) -> bool:
    if not value.is_rational:
        return False
    rational = value.to_fraction()
    return rational.denominator == 1 and rational >= -1


@lru_cache(maxsize=256)
def standard_irrep(table: CharacterTable) -> int | None:
    """Index of the standard irrep, or None.

    The standard irrep is the only faithful irrep of degree ≥ 2 whose sum with
    the trivial character takes non-negative integer values (S3, A4). Groups
    with several such irreps, like S4, have none.
    """
    candidates = [
        i
        for i in range(1, table.size)
        if table.degrees[i] >= 2
        and all(_at_least_minus_one(v) for v in table.rows[i])
        and kernel_of_irrep(table, i).order == 1
    ]
    return candidates[0] if len(candidates) == 1 else None


def irrep_name(table: CharacterTable, i: int) -> str:
    """Display name of an irrep: ``triv`` for row 0, ``std`` for the standard
    irrep, ``chi<i>`` otherwise."""
    if not 0 <= i < table.size:
        raise IndexError(f"Irrep index {i} out of range for {table.size} irreps")
    if i == 0:
        return "triv"
    return "std" if i == standard_irrep(table) else f"chi{i}"


def is_real_row(table: CharacterTable, i: int) -> bool:
    return all(v == v.conjugate() for v in table.rows[i])
