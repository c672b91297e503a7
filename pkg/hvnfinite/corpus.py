"""Contains the group builders and the built-in corpus used by the verification suites."""

import itertools
import logging
import random
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint
from sympy.utilities.iterables import partitions

from hvnfinite.errors import GroupError
from hvnfinite.group_core import (
    FiniteGroup,
    Permutation,
    group_cyclic,
    group_direct_product,
    group_from_permutations,
    relabel_group,
)

logger = logging.getLogger(__name__)

GL32_ORDER = 168


@dataclass(frozen=True)
class CorpusEntry:
    """A named group of the built-in corpus."""

    name: str
    group: FiniteGroup


# ---------------------------------------------------------------------------
# Permutation generators
# ---------------------------------------------------------------------------


def symmetric_generators(n: int) -> tuple[int, list[Permutation]]:
    """Degree and generators (n-cycle, then the transposition (0 1)) of S_n."""
    if n < 1:
        raise GroupError(f"Symmetric group degree must be positive, got {n}")
    if n == 1:
        return 1, [(0,)]
    cycle = tuple((x + 1) % n for x in range(n))
    transposition = (1, 0, *range(2, n))
    if n == 2:
        return 2, [transposition]
    return n, [cycle, transposition]


def alternating_generators(n: int) -> tuple[int, list[Permutation]]:
    """Degree and generators (the 3-cycles (0 1 k)) of A_n."""
    if n < 1:
        raise GroupError(f"Alternating group degree must be positive, got {n}")
    if n < 3:
        return n, [tuple(range(n))]
    gens = []
    for k in range(2, n):
        perm = list(range(n))
        perm[0], perm[1], perm[k] = 1, k, 0
        gens.append(tuple(perm))
    return n, gens


def dihedral_generators(n: int) -> tuple[int, list[Permutation]]:
    """Degree and generators (rotation, then reflection) of the symmetries of an n-gon, n ≥ 3."""
    if n < 3:
        raise GroupError(f"Dihedral polygon needs at least 3 vertices, got {n}")
    rotation = tuple((x + 1) % n for x in range(n))
    reflection = tuple((-x) % n for x in range(n))
    return n, [rotation, reflection]


def quaternion_generators(order: int) -> tuple[int, list[Permutation]]:
    """Regular generators (x, then y) of the dicyclic group of the given order.

    The group is ⟨x, y | x^(2m) = 1, y² = x^m, y⁻¹xy = x⁻¹⟩ of order 4m; it is
    the generalized quaternion group when the order is a power of two.
    """
    if order < 8 or order % 4 != 0:
        raise GroupError(f"Quaternion order must be a multiple of 4 and at least 8, got {order}")
    m = order // 4
    n = 2 * m

    def index(a: int, b: int) -> int:
        return a % n + n * b

    def multiply(a: int, b: int, c: int, d: int) -> int:
        if b == 0:
            return index(a + c, d)
        if d == 0:
            return index(a - c, 1)
        return index(a - c + m, 0)

    elements = [(a, b) for b in range(2) for a in range(n)]
    x = tuple(multiply(1, 0, a, b) for a, b in elements)
    y = tuple(multiply(0, 1, a, b) for a, b in elements)
    return order, [x, y]


def _apply_f2_matrix(matrix: tuple[tuple[int, ...], ...], vector: int) -> int:
    bits = [(vector >> k) & 1 for k in range(3)]
    image = 0
    for row in range(3):
        if sum(matrix[row][k] * bits[k] for k in range(3)) % 2:
            image |= 1 << row
    return image


def gl32_generators() -> tuple[int, list[Permutation]]:
    """GL(3,2) acting on the 7 nonzero vectors of F2³ (vector v is point v-1).

    Generated by a transvection and the companion matrix of x³+x+1.
    """
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    singer = ((0, 0, 1), (1, 0, 1), (0, 1, 0))
    gens = [
        tuple(_apply_f2_matrix(matrix, v) - 1 for v in range(1, 8))
        for matrix in (transvection, singer)
    ]
    return 7, gens


_GENERATORS = {
    "symmetric": symmetric_generators,
    "alternating": alternating_generators,
    "dihedral": dihedral_generators,
    "quaternion": quaternion_generators,
}


def permutation_generators(group_id: str) -> tuple[int, list[Permutation]]:
    """Degree and generators for a permutation-built inline group id."""
    if group_id == "gl32":
        return gl32_generators()
    kind, _, argument = group_id.partition(":")
    if kind not in _GENERATORS or not argument.isdigit():
        raise GroupError(f"Unknown permutation group id {group_id!r}")
    return _GENERATORS[kind](int(argument))


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def builtin_group(group_id: str) -> FiniteGroup:
    """Build a group from an inline id such as ``cyclic:4``, ``dihedral:5`` or ``gl32``.

    ``dihedral:n`` has order 2n; ``dihedral:1`` and ``dihedral:2`` are C2 and
    the Klein four-group.

    Raises:
        GroupError: the id is not recognised
    """
    kind, _, argument = group_id.partition(":")
    if kind == "cyclic" and argument.isdigit():
        return group_cyclic(int(argument))
    if kind == "dihedral" and argument in ("1", "2"):
        c2 = group_cyclic(2)
        return c2 if argument == "1" else group_direct_product(c2, c2)
    degree, gens = permutation_generators(group_id)
    group, _ = group_from_permutations(degree, gens)
    return group


def group_symmetric(n: int) -> FiniteGroup:
    return builtin_group(f"symmetric:{n}")


def group_alternating(n: int) -> FiniteGroup:
    return builtin_group(f"alternating:{n}")


def group_dihedral(n: int) -> FiniteGroup:
    return builtin_group(f"dihedral:{n}")


def group_quaternion(order: int) -> FiniteGroup:
    return builtin_group(f"quaternion:{order}")


def group_gl32() -> FiniteGroup:
    return builtin_group("gl32")


def product_of_cyclics(orders: tuple[int, ...]) -> FiniteGroup:
    group = group_cyclic(1)
    for n in orders:
        group = group_direct_product(group, group_cyclic(n))
    return group


def abelian_invariants(max_order: int) -> list[tuple[int, ...]]:
    """Elementary-divisor tuples of every abelian group of order ≤ max_order."""
    result = []
    for n in range(1, max_order + 1):
        per_prime = []
        for p, k in sorted(factorint(n).items()):
            options = []
            for partition in partitions(k):
                parts = sorted(
                    (part for part, count in partition.items() for _ in range(count)),
                    reverse=True,
                )
                options.append(tuple(p**part for part in parts))
            per_prime.append(sorted(options))
        for choice in itertools.product(*per_prime):
            result.append(tuple(q for factors in choice for q in factors))
    return result


def _cyclic_name(orders: tuple[int, ...]) -> str:
    return "x".join(f"C{n}" for n in orders) if orders else "C1"


def abelian_groups(max_order: int) -> list[CorpusEntry]:
    """One group per isomorphism type of abelian group of order ≤ max_order."""
    return [
        CorpusEntry(_cyclic_name(orders), product_of_cyclics(orders))
        for orders in abelian_invariants(max_order)
    ]


def _non_abelian_catalogue() -> list[tuple[str, int, object]]:
    """(name, order, builder) for the non-abelian corpus groups."""
    s3 = lambda: group_symmetric(3)  # noqa: E731
    return [
        ("S3", 6, s3),
        ("D4", 8, lambda: group_dihedral(4)),
        ("Q8", 8, lambda: group_quaternion(8)),
        ("D5", 10, lambda: group_dihedral(5)),
        ("A4", 12, lambda: group_alternating(4)),
        ("D6", 12, lambda: group_dihedral(6)),
        ("Dic3", 12, lambda: group_quaternion(12)),
        ("D7", 14, lambda: group_dihedral(7)),
        ("D8", 16, lambda: group_dihedral(8)),
        ("Q16", 16, lambda: group_quaternion(16)),
        ("C2xD4", 16, lambda: group_direct_product(group_cyclic(2), group_dihedral(4))),
        ("C2xQ8", 16, lambda: group_direct_product(group_cyclic(2), group_quaternion(8))),
        ("D9", 18, lambda: group_dihedral(9)),
        ("C3xS3", 18, lambda: group_direct_product(group_cyclic(3), s3())),
        ("D10", 20, lambda: group_dihedral(10)),
        ("Dic5", 20, lambda: group_quaternion(20)),
        ("D11", 22, lambda: group_dihedral(11)),
        ("S4", 24, lambda: group_symmetric(4)),
        ("D12", 24, lambda: group_dihedral(12)),
        ("Dic6", 24, lambda: group_quaternion(24)),
        ("C2xA4", 24, lambda: group_direct_product(group_cyclic(2), group_alternating(4))),
        ("C4xS3", 24, lambda: group_direct_product(group_cyclic(4), s3())),
        ("C2xC2xS3", 24, lambda: group_direct_product(group_dihedral(2), s3())),
        ("C3xD4", 24, lambda: group_direct_product(group_cyclic(3), group_dihedral(4))),
        ("C3xQ8", 24, lambda: group_direct_product(group_cyclic(3), group_quaternion(8))),
        ("C2xDic3", 24, lambda: group_direct_product(group_cyclic(2), group_quaternion(12))),
    ]


@lru_cache(maxsize=16)
def corpus_groups(max_order: int, include_gl32: bool = True) -> tuple[CorpusEntry, ...]:
    """The built-in corpus: every abelian group and the catalogue of non-abelian
    groups of order ≤ max_order, ordered by (order, name).

    GL(3,2) is appended when ``include_gl32`` is set and ``max_order ≥ 24``; it
    is the single group allowed above the bound.
    """
    entries = abelian_groups(max_order)
    entries += [
        CorpusEntry(name, build())
        for name, order, build in _non_abelian_catalogue()
        if order <= max_order
    ]
    entries.sort(key=lambda entry: (entry.group.order, entry.name))
    if include_gl32 and max_order >= 24:
        entries.append(CorpusEntry("GL(3,2)", group_gl32()))
    logger.info("Built corpus of %d groups up to order %d", len(entries), max_order)
    return tuple(entries)


def random_relabeling(group: FiniteGroup, rng: random.Random) -> FiniteGroup:
    """Return an isomorphic copy with the non-identity elements shuffled."""
    others = list(range(1, group.order))
    rng.shuffle(others)
    relabeled, _ = relabel_group(group, [0, *others])
    return relabeled
