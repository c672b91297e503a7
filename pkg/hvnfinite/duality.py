"""Grouplike subsets of the dual, compactifications, and the abelian dual.

A compactification of a finite group is a surjection onto a finite group.
Grouplike subsets of the irreps correspond to compactifications: a subset is
sent to the quotient by the intersection of the kernels of its members, and a
compactification is sent to the irreps that factor through it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from hvnfinite.char_theory import (
    CharacterTable,
    ClassFunction,
    character_table,
    conjugate_irrep,
    find_irrep,
    irrep_name,
    kernel_of_irrep,
    tensor_decompose,
)
from hvnfinite.cyclotomic import Cyclotomic
from hvnfinite.errors import (
    GroupError,
    GroupMismatch,
    InvariantViolation,
    NotAbelian,
    OrderCapExceeded,
)
from hvnfinite.group_core import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    generating_set,
    group_from_cayley_table,
    normal_subgroups,
    quotient,
    subgroup_as_group,
)
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrouplikeSubset:
    """A set of irrep indices closed under conjugates and tensor components."""

    table: CharacterTable
    members: tuple[int, ...]

    def __contains__(self, index: object) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def export(self) -> dict:
        return {"members": list(self.members), "table_hash": self.table.content_hash}


@dataclass(frozen=True)
class Compactification:
    """A surjective homomorphism ``map: base → target``."""

    base: FiniteGroup
    target: FiniteGroup
    map: GroupHom

    def __post_init__(self) -> None:
        if self.map.source != self.base or self.map.target != self.target:
            raise GroupMismatch("Compactification map does not match its groups")
        if not self.map.is_surjective:
            raise GroupError("Compactification map must be surjective")

    @cached_property
    def kernel(self) -> Subgroup:
        return self.map.kernel()


@dataclass(frozen=True)
class GrouplikeCheck:
    """Outcome of `is_grouplike`; falsy when a closure condition fails.

    Attributes:
        ok: whether every condition holds
        condition: ``"trivial"``, ``"conjugate"`` or ``"tensor"`` for the first failure
        witness: irrep indices demonstrating the failure
        message: human-readable explanation
    """

    ok: bool
    condition: str | None = None
    witness: tuple[int, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class TranslationProperties:
    abelian: bool
    trivial: bool
    predicted_order: int
    actual_order: int

    @property
    def order_matches(self) -> bool:
        return self.predicted_order == self.actual_order


def _check_indices(table: CharacterTable, indices: Iterable[int]) -> list[int]:
    checked = sorted(set(indices))
    for i in checked:
        if not 0 <= i < table.size:
            raise GroupError(f"Irrep index {i} out of range for {table.size} irreps")
    return checked


# ---------------------------------------------------------------------------
# Grouplike subsets
# ---------------------------------------------------------------------------


def is_grouplike(table: CharacterTable, subset: Iterable[int]) -> GrouplikeCheck:
    """Test the three closure conditions, reporting the first violation."""
    members = _check_indices(table, subset)
    member_set = set(members)
    if 0 not in member_set:
        return GrouplikeCheck(False, "trivial", (0,), "triv is not in the subset")
    for i in members:
        j = conjugate_irrep(table, i)
        if j not in member_set:
            return GrouplikeCheck(
                False,
                "conjugate",
                (i, j),
                f"{irrep_name(table, j)} is the conjugate of {irrep_name(table, i)} "
                "but is not in the subset",
            )
    for a, i in enumerate(members):
        for j in members[a:]:
            for k in tensor_decompose(table, i, j):
                if k not in member_set:
                    name = irrep_name(table, k)
                    return GrouplikeCheck(
                        False,
                        "tensor",
                        (i, j, k),
                        f"{name} ∈ {irrep_name(table, i)}⊗{irrep_name(table, j)} "
                        f"but {name} is not in the subset",
                    )
    return GrouplikeCheck(True)


def grouplike_closure(table: CharacterTable, subset: Iterable[int]) -> GrouplikeSubset:
    """Smallest grouplike subset containing the given irreps."""
    closed = set(_check_indices(table, subset)) | {0}
    changed = True
    while changed:
        changed = False
        current = sorted(closed)
        for i in current:
            j = conjugate_irrep(table, i)
            if j not in closed:
                closed.add(j)
                changed = True
        for a, i in enumerate(current):
            for j in current[a:]:
                new = set(tensor_decompose(table, i, j)) - closed
                if new:
                    closed |= new
                    changed = True
    return GrouplikeSubset(table, tuple(sorted(closed)))


def enumerate_grouplike(
    table: CharacterTable, limits: Limits | None = None
) -> tuple[GrouplikeSubset, ...]:
    """All grouplike subsets, sorted by (size, members).

    Every grouplike subset is reached by closing a smaller one together with a
    single extra irrep, so the search walks closed sets only.
    """
    cap = resolve_limits(limits).grouplike
    if table.size > cap:
        raise OrderCapExceeded("Dual", table.size, cap)
    start = grouplike_closure(table, ())
    found = {start.members: start}
    queue = [start]
    position = 0
    while position < len(queue):
        current = queue[position]
        position += 1
        for i in range(table.size):
            if i in current:
                continue
            closed = grouplike_closure(table, (*current.members, i))
            if closed.members not in found:
                found[closed.members] = closed
                queue.append(closed)
    return tuple(sorted(found.values(), key=lambda s: (len(s), s.members)))


def normal_subgroup_of(sigma: GrouplikeSubset) -> Subgroup:
    """Intersection of the kernels of the members."""
    group = sigma.table.group
    common = set(group.elements)
    for i in sigma:
        common &= kernel_of_irrep(sigma.table, i).member_set
    return Subgroup(group, tuple(sorted(common)))


def grouplike_of(table: CharacterTable, normal: Subgroup) -> GrouplikeSubset:
    """Irreps whose kernel contains the normal subgroup."""
    if normal.parent != table.group:
        raise GroupMismatch("Normal subgroup does not belong to the table's group")
    members = tuple(
        i
        for i in range(table.size)
        if normal.member_set <= kernel_of_irrep(table, i).member_set
    )
    return GrouplikeSubset(table, members)


def verify_grouplike_bijection(
    table: CharacterTable, limits: Limits | None = None
) -> list[str]:
    """Check that kernels and grouplike subsets correspond one to one."""
    failures = []
    subsets = enumerate_grouplike(table, limits)
    normals = normal_subgroups(table.group, limits)
    if len(subsets) != len(normals):
        failures.append(
            f"{len(subsets)} grouplike subsets but {len(normals)} normal subgroups"
        )
    for sigma in subsets:
        back = grouplike_of(table, normal_subgroup_of(sigma))
        if back.members != sigma.members:
            failures.append(f"Grouplike subset {list(sigma.members)} maps back to {list(back.members)}")
    for normal in normals:
        back = normal_subgroup_of(grouplike_of(table, normal))
        if back.members != normal.members:
            failures.append(f"Normal subgroup {list(normal.members)} maps back to {list(back.members)}")
    return failures


# ---------------------------------------------------------------------------
# Compactifications and the Rep/Tan correspondence
# ---------------------------------------------------------------------------


def compactification_from_normal(group: FiniteGroup, normal: Subgroup) -> Compactification:
    factor, surjection = quotient(group, normal)
    return Compactification(group, factor, surjection)


def identity_compactification(group: FiniteGroup) -> Compactification:
    return Compactification(group, group, GroupHom(group, group, tuple(group.elements)))


def trivial_compactification(group: FiniteGroup) -> Compactification:
    return compactification_from_normal(group, Subgroup(group, tuple(group.elements)))


def rep_functor(compactification: Compactification, limits: Limits | None = None) -> GrouplikeSubset:
    """Irreps of the base group that factor through the compactification."""
    table = character_table(compactification.base, limits)
    sigma = grouplike_of(table, compactification.kernel)
    check = is_grouplike(table, sigma.members)
    if not check:
        raise InvariantViolation(f"Pulled-back dual is not grouplike: {check.message}")
    return sigma


def tan_functor(table: CharacterTable, sigma: GrouplikeSubset) -> Compactification:
    """The quotient of the group by the common kernel of the members."""
    if sigma.table is not table and sigma.table.content_hash != table.content_hash:
        raise GroupMismatch("Grouplike subset belongs to a different character table")
    return compactification_from_normal(table.group, normal_subgroup_of(sigma))


def compactification_morphism(first: Compactification, second: Compactification) -> GroupHom | None:
    """The unique ``Φ`` with ``Φ ∘ first = second``, if one exists.

    It exists exactly when the kernel of ``first`` lies in the kernel of ``second``.
    """
    if first.base != second.base:
        raise GroupMismatch("Compactifications of different groups")
    if not first.kernel.member_set <= second.kernel.member_set:
        return None
    images = [0] * first.target.order
    for g in first.base.elements:
        images[first.map(g)] = second.map(g)
    return GroupHom(first.target, second.target, tuple(images))


def verify_rep_tan_roundtrip(table: CharacterTable, sigma: GrouplikeSubset) -> bool:
    """Whether Rep(Tan(σ)) = σ exactly."""
    return rep_functor(tan_functor(table, sigma)).members == sigma.members


def verify_tan_rep_roundtrip(
    compactification: Compactification, limits: Limits | None = None
) -> GroupHom | None:
    """Build the isomorphism Tan(Rep(c)) → c commuting with the maps from the base."""
    table = character_table(compactification.base, limits)
    rebuilt = tan_functor(table, rep_functor(compactification, limits))
    morphism = compactification_morphism(rebuilt, compactification)
    if morphism is None or not morphism.is_injective:
        logger.error(
            "Tan(Rep(c)) has kernel %s but c has kernel %s",
            list(rebuilt.kernel.members),
            list(compactification.kernel.members),
        )
        return None
    return morphism


def translation_properties(table: CharacterTable, sigma: GrouplikeSubset) -> TranslationProperties:
    """Properties of Tan(σ) predicted from the degrees of the members."""
    return TranslationProperties(
        abelian=all(table.degrees[i] == 1 for i in sigma),
        trivial=sigma.members == (0,),
        predicted_order=sum(table.degrees[i] ** 2 for i in sigma),
        actual_order=tan_functor(table, sigma).target.order,
    )


# ---------------------------------------------------------------------------
# Abelian groups: the Pontryagin dual
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DualGroup:
    """The character group of a finite abelian group.

    Attributes:
        group: the abelian group G
        dual: G* under pointwise multiplication (trivial character at index 0)
        exponents: ``χ_k(g) = ζ_e^exponents[k][g]`` with ``e = group.exponent``
        characters: the same characters as class functions
    """

    group: FiniteGroup
    dual: FiniteGroup
    exponents: tuple[tuple[int, ...], ...]
    characters: tuple[ClassFunction, ...]

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {vector: k for k, vector in enumerate(self.exponents)}


def _homomorphisms_to_roots(group: FiniteGroup, root_order: int) -> list[tuple[int, ...]]:
    """All homomorphisms into the additive group Z/root_order, as value vectors."""
    gens = generating_set(group)
    results = []

    def extend(assignment: list[int]) -> tuple[int, ...] | None:
        values = {0: 0}
        queue = [0]
        position = 0
        while position < len(queue):
            x = queue[position]
            position += 1
            for s, image in zip(gens, assignment):
                y = group.mul(x, s)
                value = (values[x] + image) % root_order
                known = values.get(y)
                if known is None:
                    values[y] = value
                    queue.append(y)
                elif known != value:
                    return None
        return tuple(values[g] for g in group.elements)

    def search(assignment: list[int]) -> None:
        depth = len(assignment)
        if depth == len(gens):
            vector = extend(assignment)
            if vector is not None:
                results.append(vector)
            return
        step = root_order // group.element_orders[gens[depth]]
        for a in range(0, root_order, step):
            search([*assignment, a])

    search([])
    return sorted(set(results))


@lru_cache(maxsize=128)
def pontryagin_dual(group: FiniteGroup) -> DualGroup:
    """Compute G* for an abelian group by enumerating homomorphisms into roots of unity.

    Raises:
        NotAbelian: the group is not abelian
    """
    if not group.is_abelian:
        raise NotAbelian(f"Group of order {group.order} is not abelian")
    e = group.exponent
    exponents = _homomorphisms_to_roots(group, e)
    if len(exponents) != group.order:
        raise InvariantViolation(
            f"Found {len(exponents)} characters for an abelian group of order {group.order}"
        )
    index = {vector: k for k, vector in enumerate(exponents)}
    table = [
        [index[tuple((x + y) % e for x, y in zip(a, b))] for b in exponents]
        for a in exponents
    ]
    dual = group_from_cayley_table(table, [f"x{k}" for k in range(len(exponents))])
    characters = tuple(
        ClassFunction(group, tuple(Cyclotomic.root_of_unity(e, v) for v in vector))
        for vector in exponents
    )
    return DualGroup(group, dual, tuple(exponents), characters)


def dual_to_irreps(dual: DualGroup, table: CharacterTable | None = None) -> tuple[int, ...]:
    """Map every element of G* to the index of the same character in the table."""
    table = table if table is not None else character_table(dual.group)
    return tuple(find_irrep(table, character.values) for character in dual.characters)


def dual_subgroups(dual: DualGroup, limits: Limits | None = None) -> tuple[Subgroup, ...]:
    return all_subgroups(dual.dual, limits)


def ddual(compactification: Compactification) -> Subgroup:
    """Characters of the target pulled back to the base, as a subgroup of G*.

    Raises:
        NotAbelian: the target is not abelian
    """
    target_dual = pontryagin_dual(compactification.target)
    base_dual = pontryagin_dual(compactification.base)
    scale = compactification.base.exponent // compactification.target.exponent
    members = set()
    for vector in target_dual.exponents:
        pulled = tuple(
            vector[compactification.map(g)] * scale for g in compactification.base.elements
        )
        members.add(base_dual.index[pulled])
    return Subgroup(base_dual.dual, tuple(sorted(members)))


def cdual(dual: DualGroup, sigma: Subgroup) -> Compactification:
    """The evaluation map from G onto the dual of a subgroup ``σ ≤ G*``."""
    if sigma.parent != dual.dual:
        raise GroupMismatch("Subgroup does not live in this dual group")
    standalone, _ = subgroup_as_group(sigma)
    sigma_dual = pontryagin_dual(standalone)
    e = dual.group.exponent
    step = e // standalone.exponent
    images = []
    for t in dual.group.elements:
        evaluation = tuple(dual.exponents[chi][t] // step for chi in sigma.members)
        images.append(sigma_dual.index[evaluation])
    surjection = GroupHom(dual.group, sigma_dual.dual, tuple(images))
    if not surjection.is_surjective:
        raise InvariantViolation("Evaluation map onto the dual of a subgroup is not surjective")
    return Compactification(dual.group, sigma_dual.dual, surjection)


def verify_abelian_coherence(group: FiniteGroup, limits: Limits | None = None) -> list[str]:
    """Check DDual∘CDual = id and agreement with the Rep/Tan path for an abelian group."""
    failures = []
    dual = pontryagin_dual(group)
    table = character_table(group, limits)
    to_irreps = dual_to_irreps(dual, table)
    if sorted(to_irreps) != list(range(table.size)):
        return [f"G* does not biject with the irreps of the group of order {group.order}"]
    for sigma in dual_subgroups(dual, limits):
        compactification = cdual(dual, sigma)
        back = ddual(compactification)
        if back.members != sigma.members:
            failures.append(f"DDual(CDual(σ)) = {list(back.members)} for σ = {list(sigma.members)}")
        irreps = tuple(sorted(to_irreps[k] for k in sigma.members))
        via_tan = tan_functor(table, GrouplikeSubset(table, irreps))
        if via_tan.kernel.members != compactification.kernel.members:
            failures.append(f"CDual and Tan disagree on the kernel for σ = {list(sigma.members)}")
        via_rep = rep_functor(compactification, limits)
        if via_rep.members != irreps:
            failures.append(f"Rep(CDual(σ)) = {list(via_rep.members)} but σ ↦ {list(irreps)}")
    return failures

