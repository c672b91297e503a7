"""Contains the literal Tannaka reconstruction check for small groups.

Every irrep of a handful of small groups is realised by explicit matrices.
A Tannaka family over a grouplike subset assigns one matrix to each member and
must commute with every intertwiner between tensor products and with every
intertwiner between an irrep's conjugate and its conjugate irrep. Candidates
are drawn from the images of the group, and the survivors must be exactly the
families ``(π_i(g))_i`` coming from group elements.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from hvnfinite.char_theory import (
    CharacterTable,
    character_table,
    conjugate_irrep,
    tensor_decompose,
)
from hvnfinite.corpus import builtin_group, permutation_generators
from hvnfinite.duality import GrouplikeSubset, enumerate_grouplike, tan_functor
from hvnfinite.errors import GroupError, InvariantViolation
from hvnfinite.group_core import FiniteGroup, conjugacy_classes, group_from_permutations
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9
MAX_CYCLIC_ORDER = 8

_TWO_DIMENSIONAL_GENERATORS = {
    "symmetric:3": ([[0, -1], [1, -1]], [[0, 1], [1, 0]]),
    "dihedral:4": ([[0, -1], [1, 0]], [[1, 0], [0, -1]]),
    "quaternion:8": ([[1j, 0], [0, -1j]], [[0, 1], [-1, 0]]),
}

Matrices = tuple[np.ndarray, ...]


@dataclass(frozen=True, eq=False)
class MatrixModel:
    """Explicit matrices for every irrep of a group.

    Attributes:
        name: the inline group id
        table: character table of the group
        matrices: irrep index → one matrix per group element
    """

    name: str
    table: CharacterTable
    matrices: dict[int, Matrices]

    @property
    def group(self) -> FiniteGroup:
        return self.table.group


@dataclass(frozen=True)
class TannakaReport:
    """Outcome of the reconstruction check for one grouplike subset."""

    members: tuple[int, ...]
    families: int
    expected: int
    matches_image: bool

    @property
    def passed(self) -> bool:
        return self.matches_image and self.families == self.expected


def model_group_ids() -> list[str]:
    """Group ids for which `matrix_models` can build every irrep."""
    return [f"cyclic:{n}" for n in range(1, MAX_CYCLIC_ORDER + 1)] + list(_TWO_DIMENSIONAL_GENERATORS)


def _expand(group: FiniteGroup, generators: Sequence[int], images: Sequence[np.ndarray]) -> Matrices:
    """Extend generator images to the whole group and check the homomorphism law."""
    result: list[np.ndarray | None] = [None] * group.order
    result[0] = np.eye(images[0].shape[0], dtype=complex)
    queue = [0]
    for x in queue:
        for s, image in zip(generators, images):
            y = group.mul(x, s)
            if result[y] is None:
                result[y] = result[x] @ image
                queue.append(y)
    if any(m is None for m in result):
        raise GroupError("Model generators do not generate the group")
    for a in group.elements:
        for b in group.elements:
            if not np.allclose(result[group.mul(a, b)], result[a] @ result[b], atol=TOLERANCE):
                raise InvariantViolation(f"Matrix model is not a homomorphism on ({a}, {b})")
    return tuple(result)


def _linear_models(table: CharacterTable) -> dict[int, Matrices]:
    return {
        i: tuple(
            np.array([[table.value(i, g).to_complex()]], dtype=complex) for g in table.group.elements
        )
        for i in range(table.size)
        if table.degrees[i] == 1
    }


def _matching_irrep(table: CharacterTable, matrices: Matrices) -> int:
    for i, row in enumerate(table.rows):
        traces = [np.trace(matrices[cls.representative]) for cls in table.classes]
        if all(abs(t - v.to_complex()) < TOLERANCE for t, v in zip(traces, row)):
            return i
    raise InvariantViolation("Matrix model character is not a row of the table")


def matrix_models(name: str, limits: Limits | None = None) -> MatrixModel:
    """Build explicit matrices for every irrep of ``cyclic:n`` (n ≤ 8), S3, D4 or Q8.

    Linear characters are used as 1×1 matrices; the single 2-dimensional irrep
    of S3, D4 and Q8 comes from fixed integral or unitary generator matrices.

    Raises:
        GroupError: no model is known for the group id
    """
    if name not in model_group_ids():
        raise GroupError(f"No matrix model for group {name!r}")
    if name.startswith("cyclic:"):
        group = builtin_group(name)
        table = character_table(group, limits)
        return MatrixModel(name, table, _linear_models(table))

    degree, generators = permutation_generators(name)
    group, perms = group_from_permutations(degree, generators, limits)
    table = character_table(group, limits)
    matrices = _linear_models(table)
    index = {perm: k for k, perm in enumerate(perms)}
    images = [np.array(m, dtype=complex) for m in _TWO_DIMENSIONAL_GENERATORS[name]]
    expanded = _expand(group, [index[tuple(g)] for g in generators], images)
    matrices[_matching_irrep(table, expanded)] = expanded
    missing = set(range(table.size)) - set(matrices)
    if missing:
        raise InvariantViolation(f"Matrix model of {name} misses irreps {sorted(missing)}")
    return MatrixModel(name, table, matrices)


def intertwiner_basis(source: Matrices, target: Matrices) -> list[np.ndarray]:
    """Orthonormal basis of ``{T : target(g)·T = T·source(g) for all g}``.

    Every elementary matrix is averaged over the group; the averages span the
    intertwiner space.
    """
    rows, columns = target[0].shape[0], source[0].shape[0]
    inverses = [np.linalg.inv(m) for m in source]
    averages = []
    for a in range(rows):
        for b in range(columns):
            unit = np.zeros((rows, columns), dtype=complex)
            unit[a, b] = 1
            average = sum(t @ unit @ s for t, s in zip(target, inverses)) / len(source)
            averages.append(average.reshape(-1))
    _, singular, vh = np.linalg.svd(np.array(averages))
    rank = int(np.sum(singular > 1e-8))
    return [vh[r].reshape(rows, columns) for r in range(rank)]


def _distinct_images(matrices: Matrices) -> list[int]:
    """One group element per distinct matrix, the smallest index first."""
    chosen: list[int] = []
    for g, m in enumerate(matrices):
        if not any(np.allclose(m, matrices[h], atol=TOLERANCE) for h in chosen):
            chosen.append(g)
    return chosen


def _canonical_element(matrices: Matrices, candidates: Sequence[int], g: int) -> int:
    for h in candidates:
        if np.allclose(matrices[g], matrices[h], atol=TOLERANCE):
            return h
    raise InvariantViolation(f"Element {g} has no representative image")


Constraint = tuple[int, Callable[[dict[int, np.ndarray]], bool]]


def _constraints(model: MatrixModel, members: Sequence[int]) -> list[Constraint]:
    """Naturality conditions, each tagged with the position after which it can be checked."""
    table = model.table
    position = {i: k for k, i in enumerate(members)}
    constraints: list[Constraint] = []

    for a, i in enumerate(members):
        for j in members[a:]:
            source = tuple(np.kron(x, y) for x, y in zip(model.matrices[i], model.matrices[j]))
            for k in tensor_decompose(table, i, j):
                for basis in intertwiner_basis(source, model.matrices[k]):

                    def natural(u, i=i, j=j, k=k, t=basis):
                        return np.allclose(t @ np.kron(u[i], u[j]), u[k] @ t, atol=TOLERANCE)

                    constraints.append((max(position[i], position[j], position[k]), natural))

        bar = conjugate_irrep(table, i)
        conjugated = tuple(np.conj(m) for m in model.matrices[i])
        for basis in intertwiner_basis(conjugated, model.matrices[bar]):

            def self_adjoint(u, i=i, bar=bar, s=basis):
                return np.allclose(u[bar] @ s, s @ np.conj(u[i]), atol=TOLERANCE)

            constraints.append((max(position[i], position[bar]), self_adjoint))
    return constraints


def tannaka_families(model: MatrixModel, sigma: GrouplikeSubset) -> list[tuple[int, ...]]:
    """Natural families over σ drawn from the group images.

    A family is reported as one representative element per member: the
    smallest group element whose image is the chosen matrix.
    """
    members = sigma.members
    candidates = [_distinct_images(model.matrices[i]) for i in members]
    by_depth: dict[int, list[Callable]] = {}
    for depth, check in _constraints(model, members):
        by_depth.setdefault(depth, []).append(check)

    families: list[tuple[int, ...]] = []
    chosen: dict[int, np.ndarray] = {}

    def search(depth: int, picked: list[int]) -> None:
        if depth == len(members):
            families.append(tuple(picked))
            return
        irrep = members[depth]
        for g in candidates[depth]:
            chosen[irrep] = model.matrices[irrep][g]
            if all(check(chosen) for check in by_depth.get(depth, [])):
                search(depth + 1, [*picked, g])
        chosen.pop(irrep, None)

    search(0, [])
    return families


def check_tannaka(model: MatrixModel, sigma: GrouplikeSubset) -> TannakaReport:
    members = sigma.members
    candidates = [_distinct_images(model.matrices[i]) for i in members]
    from_group = {
        tuple(
            _canonical_element(model.matrices[i], options, g)
            for i, options in zip(members, candidates)
        )
        for g in model.group.elements
    }
    families = tannaka_families(model, sigma)
    return TannakaReport(
        members=members,
        families=len(families),
        expected=tan_functor(model.table, sigma).target.order,
        matches_image=set(families) == from_group and len(set(families)) == len(families),
    )


def verify_tannaka(model: MatrixModel, limits: Limits | None = None) -> list[TannakaReport]:
    """Run the reconstruction check on every grouplike subset of the model's group."""
    limits = resolve_limits(limits)
    start = time.time()
    reports = [check_tannaka(model, sigma) for sigma in enumerate_grouplike(model.table, limits)]
    logger.info(
        "Checked %d grouplike subsets of %s (%d classes) in %.2f seconds",
        len(reports),
        model.name,
        len(conjugacy_classes(model.group)),
        time.time() - start,
    )
    return reports
