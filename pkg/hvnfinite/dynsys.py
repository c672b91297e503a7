"""Finite topological dynamical systems.

A system is a finite group acting on the points ``0..k-1``; the action of
every group element is stored, so no word problem is ever solved downstream.
Minimal means transitive, the enveloping group is the image of the group in
the symmetric group of the points, and the point spectrum is read off the
permutation character.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from sympy import Matrix

from hvnfinite.char_theory import (
    CharacterTable,
    character_table,
    galois_orbits,
    inner_product,
    irrep_name,
    permutation_character,
)
from hvnfinite.cyclotomic import Cyclotomic
from hvnfinite.duality import (
    Compactification,
    GrouplikeCheck,
    GrouplikeSubset,
    compactification_morphism,
    identity_compactification,
    is_grouplike,
    tan_functor,
)
from hvnfinite.errors import (
    DynamicsError,
    GroupMismatch,
    InvariantViolation,
    NotEquivariant,
    NotMinimal,
    NotSurjective,
    OrderCapExceeded,
    RelationViolation,
    SystemNotNormal,
)
from hvnfinite.group_core import (
    FiniteGroup,
    GroupHom,
    Permutation,
    Subgroup,
    compose_permutations,
    generating_set,
    group_from_permutations,
    identity_permutation,
    is_permutation,
    subgroups_up_to_conjugacy,
)
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TopSystem:
    """A group acting on ``points`` points; ``action[t]`` is the permutation of element t."""

    group: FiniteGroup
    points: int
    action: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if self.points < 1:
            raise DynamicsError(f"A system needs at least one point, got {self.points}")
        if len(self.action) != self.group.order:
            raise DynamicsError(
                f"Action lists {len(self.action)} permutations for a group of order {self.group.order}"
            )
        if self.action[0] != identity_permutation(self.points):
            raise DynamicsError("The identity element must act trivially")

    def apply(self, element: int, point: int) -> int:
        return self.action[element][point]

    def export(self) -> dict:
        return {
            "group_hash": self.group.content_hash,
            "points": self.points,
            "action": [list(perm) for perm in self.action],
        }


@dataclass(frozen=True)
class PointedSystem:
    system: TopSystem
    base: int

    def __post_init__(self) -> None:
        if not 0 <= self.base < self.system.points:
            raise DynamicsError(
                f"Base point {self.base} out of range for {self.system.points} points"
            )


@dataclass(frozen=True)
class PointSpectrum:
    """Multiplicity of every irrep in the permutation representation."""

    table: CharacterTable
    multiplicities: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.multiplicities) if m > 0)

    def multiplicity(self, i: int) -> int:
        return self.multiplicities[i]

    def dimension(self) -> int:
        return sum(m * d for m, d in zip(self.multiplicities, self.table.degrees))

    def export(self) -> dict:
        return {
            "spectrum": [
                [i, m, self.table.degrees[i]] for i, m in enumerate(self.multiplicities) if m > 0
            ],
            "table_hash": self.table.content_hash,
        }


@dataclass(frozen=True)
class NormalityReport:
    """Outcome of `is_normal`.

    Attributes:
        normal: whether every clause holds
        minimal: whether the system is transitive (reported separately)
        violations: violated clauses in order, multiplicity clause first
        spectrum: the point spectrum the clauses were read from
        grouplike: the grouplike test of the spectrum support
    """

    normal: bool
    minimal: bool
    violations: tuple[str, ...]
    spectrum: PointSpectrum
    grouplike: GrouplikeCheck

    @property
    def diagnosis(self) -> str | None:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.normal


@dataclass(frozen=True)
class BoundCheck:
    ok: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class EnvelopingGroup:
    """Enveloping compactification of a pointed minimal system.

    Attributes:
        compactification: G onto its image H in the symmetric group of the points
        permutations: the permutation of every element of H
        evaluation: ``evaluation[h] = h(base)``
    """

    compactification: Compactification
    permutations: tuple[Permutation, ...]
    evaluation: tuple[int, ...]


@dataclass(frozen=True)
class QuasiRotationModel:
    compactification: Compactification
    stabilizer: Subgroup
    system: TopSystem
    isomorphism: tuple[int, ...]


@dataclass(frozen=True)
class NormalExtension:
    """A normal system with factor maps onto two minimal systems."""

    system: TopSystem
    first_factor: tuple[int, ...]
    second_factor: tuple[int, ...]


@dataclass(frozen=True)
class GassmannPair:
    first_subgroup: Subgroup
    second_subgroup: Subgroup
    first: TopSystem
    second: TopSystem


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def system_from_generators(
    group: FiniteGroup,
    generators: Sequence[int],
    images: Sequence[Sequence[int]],
    points: int,
) -> TopSystem:
    """Expand generator images on ``points`` points to the full action table.

    Raises:
        DynamicsError: the images are not permutations or the generators do not generate
        RelationViolation: two words naming the same element act differently
    """
    if len(generators) != len(images):
        raise DynamicsError(f"{len(generators)} generators but {len(images)} images")
    for k, image in enumerate(images):
        if not is_permutation(list(image), points):
            raise DynamicsError(f"Image of generator {k} is not a bijection of [0, {points})")
    action: list[Permutation | None] = [None] * group.order
    words: list[list[int] | None] = [None] * group.order
    action[0] = identity_permutation(points)
    words[0] = []
    queue = [0]
    for x in queue:
        for position, (s, image) in enumerate(zip(generators, images)):
            y = group.mul(x, s)
            candidate = compose_permutations(action[x], tuple(image))
            word = [*words[x], position]
            if action[y] is None:
                action[y] = candidate
                words[y] = word
                queue.append(y)
            elif action[y] != candidate:
                raise RelationViolation(
                    word,
                    f"Generator words {word} and {words[y]} name the same element but act differently",
                )
    if any(perm is None for perm in action):
        raise DynamicsError("Generators do not generate the group")
    return TopSystem(group, points, tuple(action))


def system_from_table(group: FiniteGroup, action: Sequence[Sequence[int]], points: int) -> TopSystem:
    """Accept one permutation per group element after checking the homomorphism law.

    Raises:
        RelationViolation: the pair ``(s, t)`` where ``action[s·t] ≠ action[s] ∘ action[t]``
    """
    perms = tuple(tuple(p) for p in action)
    for k, perm in enumerate(perms):
        if not is_permutation(list(perm), points):
            raise DynamicsError(f"Action of element {k} is not a bijection of [0, {points})")
    system = TopSystem(group, points, perms)
    for s in group.elements:
        for t in group.elements:
            if perms[group.mul(s, t)] != compose_permutations(perms[s], perms[t]):
                raise RelationViolation([s, t], "Action is not a homomorphism")
    return system


def regular_action(group: FiniteGroup) -> TopSystem:
    """Left translation of the group on itself."""
    return TopSystem(
        group,
        group.order,
        tuple(tuple(group.mul(t, x) for x in group.elements) for t in group.elements),
    )


def trivial_action(group: FiniteGroup, points: int) -> TopSystem:
    identity = identity_permutation(points)
    return TopSystem(group, points, tuple(identity for _ in group.elements))


def _left_cosets(group: FiniteGroup, subgroup: Subgroup) -> list[int]:
    """Coset number of every element; cosets are numbered by their smallest element."""
    coset_of = [-1] * group.order
    count = 0
    for g in group.elements:
        if coset_of[g] != -1:
            continue
        for h in subgroup.members:
            coset_of[group.mul(g, h)] = count
        count += 1
    return coset_of


def quasi_rotation(compactification: Compactification, subgroup: Subgroup) -> TopSystem:
    """Left translation through the compactification on the cosets of ``subgroup``."""
    target = compactification.target
    if subgroup.parent != target:
        raise GroupMismatch("Subgroup must live in the target of the compactification")
    coset_of = _left_cosets(target, subgroup)
    representatives = {}
    for h in target.elements:
        representatives.setdefault(coset_of[h], h)
    points = len(representatives)
    action = tuple(
        tuple(
            coset_of[target.mul(compactification.map(t), representatives[c])]
            for c in range(points)
        )
        for t in compactification.base.elements
    )
    return TopSystem(compactification.base, points, action)


def coset_action(group: FiniteGroup, subgroup: Subgroup) -> TopSystem:
    """The group acting on the left cosets of a subgroup."""
    return quasi_rotation(identity_compactification(group), subgroup)


def transitive_actions(
    group: FiniteGroup, limits: Limits | None = None, max_points: int | None = None
) -> list[TopSystem]:
    """One coset action per conjugacy class of subgroups, fewest points first."""
    systems = [
        coset_action(group, h)
        for h in reversed(subgroups_up_to_conjugacy(group, limits))
        if max_points is None or group.order // h.order <= max_points
    ]
    systems.sort(key=lambda s: s.points)
    return systems


def disjoint_union(a: TopSystem, b: TopSystem) -> TopSystem:
    if a.group != b.group:
        raise GroupMismatch("Disjoint union of systems over different groups")
    shift = a.points
    return TopSystem(
        a.group,
        a.points + b.points,
        tuple(
            (*pa, *(y + shift for y in pb)) for pa, pb in zip(a.action, b.action)
        ),
    )


def relabel_system(system: TopSystem, relabeling: Sequence[int]) -> TopSystem:
    """Rename point x to ``relabeling[x]``."""
    if not is_permutation(list(relabeling), system.points):
        raise DynamicsError("Relabeling must be a permutation of the points")
    action = []
    for perm in system.action:
        renamed = [0] * system.points
        for x, y in enumerate(perm):
            renamed[relabeling[x]] = relabeling[y]
        action.append(tuple(renamed))
    return TopSystem(system.group, system.points, tuple(action))


# ---------------------------------------------------------------------------
# Orbits and maps
# ---------------------------------------------------------------------------


def orbits(system: TopSystem) -> list[tuple[int, ...]]:
    """Orbits sorted by their smallest point."""
    seen: set[int] = set()
    result = []
    for x in range(system.points):
        if x in seen:
            continue
        orbit = sorted({perm[x] for perm in system.action})
        seen.update(orbit)
        result.append(tuple(orbit))
    return result


def is_minimal(system: TopSystem) -> bool:
    return len(orbits(system)) == 1


def _require_minimal(system: TopSystem) -> None:
    if not is_minimal(system):
        raise NotMinimal(f"System on {system.points} points has {len(orbits(system))} orbits")


def stabilizer(system: TopSystem, point: int) -> Subgroup:
    return Subgroup(
        system.group, tuple(t for t in system.group.elements if system.action[t][point] == point)
    )


def is_equivariant(a: TopSystem, b: TopSystem, q: Sequence[int]) -> bool:
    """Whether ``q(φ_t(x)) = ψ_t(q(x))`` for every element and point."""
    if a.group != b.group or len(q) != a.points:
        return False
    if any(not 0 <= y < b.points for y in q):
        return False
    return all(
        q[pa[x]] == pb[q[x]] for pa, pb in zip(a.action, b.action) for x in range(a.points)
    )


def _orbit_map(a: TopSystem, x: int, b: TopSystem, y: int) -> dict[int, int] | None:
    """The equivariant map of the orbit of x sending x to y, if it is a bijection onto y's orbit."""
    mapping: dict[int, int] = {}
    used: set[int] = set()
    for pa, pb in zip(a.action, b.action):
        source, image = pa[x], pb[y]
        known = mapping.get(source)
        if known is None:
            if image in used:
                return None
            mapping[source] = image
            used.add(image)
        elif known != image:
            return None
    return mapping


# ---------------------------------------------------------------------------
# Envelope and rotations
# ---------------------------------------------------------------------------


def env_functor(pointed: PointedSystem, limits: Limits | None = None) -> EnvelopingGroup:
    """The enveloping compactification of a pointed minimal system.

    Raises:
        NotMinimal: the system has more than one orbit
    """
    system = pointed.system
    _require_minimal(system)
    generators = [system.action[t] for t in generating_set(system.group)]
    image, permutations = group_from_permutations(system.points, generators, limits)
    index = {perm: h for h, perm in enumerate(permutations)}
    surjection = GroupHom(
        system.group, image, tuple(index[system.action[t]] for t in system.group.elements)
    )
    return EnvelopingGroup(
        compactification=Compactification(system.group, image, surjection),
        permutations=permutations,
        evaluation=tuple(perm[pointed.base] for perm in permutations),
    )


def rot_functor(compactification: Compactification) -> PointedSystem:
    """Left translation through the compactification on its target, pointed at the identity."""
    target = compactification.target
    action = tuple(
        tuple(target.mul(compactification.map(t), h) for h in target.elements)
        for t in compactification.base.elements
    )
    return PointedSystem(TopSystem(compactification.base, target.order, action), 0)


def verify_env_rot_roundtrip(pointed: PointedSystem, limits: Limits | None = None) -> tuple[int, ...] | None:
    """Return the evaluation map Rot(Env(p)) → p when it is a base-preserving equivariant bijection."""
    envelope = env_functor(pointed, limits)
    rotation = rot_functor(envelope.compactification)
    q = envelope.evaluation
    if len(q) != pointed.system.points or len(set(q)) != len(q) or q[rotation.base] != pointed.base:
        return None
    return q if is_equivariant(rotation.system, pointed.system, q) else None


def verify_rot_env_roundtrip(compactification: Compactification, limits: Limits | None = None) -> bool:
    """Whether Env(Rot(c)) is isomorphic to c as a compactification."""
    envelope = env_functor(rot_functor(compactification), limits)
    forward = compactification_morphism(envelope.compactification, compactification)
    backward = compactification_morphism(compactification, envelope.compactification)
    return forward is not None and backward is not None and forward.is_injective


def quasi_rotation_model(system: TopSystem, limits: Limits | None = None) -> QuasiRotationModel:
    """Present a minimal system as a quasi-rotation of its enveloping compactification.

    The subgroup is the stabilizer of point 0 in the enveloping group; the
    returned isomorphism goes from the system to the model.
    """
    envelope = env_functor(PointedSystem(system, 0), limits)
    c = envelope.compactification
    fixing = Subgroup(c.target, tuple(h for h in c.target.elements if envelope.evaluation[h] == 0))
    model = quasi_rotation(c, fixing)
    coset_of = _left_cosets(c.target, fixing)
    isomorphism = [0] * system.points
    for h in c.target.elements:
        isomorphism[envelope.evaluation[h]] = coset_of[h]
    isomorphism = tuple(isomorphism)
    if not is_equivariant(system, model, isomorphism):
        raise InvariantViolation("Quasi-rotation model is not equivariantly isomorphic")
    return QuasiRotationModel(c, fixing, model, isomorphism)


# ---------------------------------------------------------------------------
# Spectrum and normality
# ---------------------------------------------------------------------------


def point_spectrum(system: TopSystem, limits: Limits | None = None) -> PointSpectrum:
    """Multiplicities ``⟨χ_perm, χ_i⟩`` of every irrep."""
    table = character_table(system.group, limits)
    chi = permutation_character(system)
    multiplicities = []
    for i in range(table.size):
        m = inner_product(chi, table.character(i))
        if m.denominator != 1 or m < 0:
            raise InvariantViolation(f"Multiplicity of irrep {i} is {m}")
        multiplicities.append(int(m))
    spectrum = PointSpectrum(table, tuple(multiplicities))
    if spectrum.dimension() != system.points:
        raise InvariantViolation(
            f"Multiplicities account for dimension {spectrum.dimension()}, not {system.points}"
        )
    return spectrum


def is_normal(system: TopSystem, limits: Limits | None = None) -> NormalityReport:
    """Test whether every multiplicity is 0 or the degree and the support is grouplike."""
    spectrum = point_spectrum(system, limits)
    table = spectrum.table
    wrong = [
        f"mult({irrep_name(table, i)})={m}{'<' if m < d else '>'}{d}"
        for i, (m, d) in enumerate(zip(spectrum.multiplicities, table.degrees))
        if m not in (0, d)
    ]
    violations = []
    if wrong:
        violations.append(", ".join(wrong))
    check = is_grouplike(table, spectrum.support)
    if not check:
        violations.append("support not grouplike")
    return NormalityReport(
        normal=not violations,
        minimal=is_minimal(system),
        violations=tuple(violations),
        spectrum=spectrum,
        grouplike=check,
    )


def mult_bound_check(system: TopSystem, limits: Limits | None = None) -> BoundCheck:
    """Check ``mult(i) ≤ degree(i)`` on a minimal system; the witness is the first offender.

    Raises:
        NotMinimal: the system has more than one orbit
    """
    _require_minimal(system)
    spectrum = point_spectrum(system, limits)
    for i, (m, d) in enumerate(zip(spectrum.multiplicities, spectrum.table.degrees)):
        if m > d:
            logger.error("Multiplicity bound fails: mult(%s)=%d > %d", irrep_name(spectrum.table, i), m, d)
            return BoundCheck(False, i)
    return BoundCheck(True)


def isotypic_multiplicities(system: TopSystem, limits: Limits | None = None) -> tuple[int, ...]:
    """Multiplicities from ranks of rational isotypic projections.

    Each Galois orbit of irreps has a rational projection whose rank is the
    total dimension of the orbit's isotypic components; members of an orbit
    share degree and multiplicity.
    """
    limits = resolve_limits(limits)
    if system.points > limits.isotypic_points:
        raise OrderCapExceeded("Isotypic projection", system.points, limits.isotypic_points)
    table = character_table(system.group, limits)
    group = system.group
    multiplicities = [0] * table.size
    for orbit in galois_orbits(table):
        entries = [[Fraction(0)] * system.points for _ in range(system.points)]
        for g in group.elements:
            weight = sum(
                (table.value(i, g).conjugate() * table.degrees[i] for i in orbit),
                Cyclotomic.rational(0),
            )
            coefficient = weight.to_fraction() / group.order
            if not coefficient:
                continue
            for y, gy in enumerate(system.action[g]):
                entries[gy][y] += coefficient
        rank = Matrix(entries).rank()
        share = len(orbit) * table.degrees[orbit[0]]
        if rank % share:
            raise InvariantViolation(f"Isotypic rank {rank} is not divisible by {share}")
        for i in orbit:
            multiplicities[i] = rank // share
    return tuple(multiplicities)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def normal_iso_decision(
    a: TopSystem, b: TopSystem, limits: Limits | None = None
) -> tuple[int, ...] | None:
    """Decide isomorphism of normal systems from their spectra and build the bijection.

    Both systems are identified with the rotation on their enveloping group
    (base point 0); equal supports give equal kernels, and the induced
    isomorphism of enveloping groups carries one evaluation map to the other.

    Raises:
        GroupMismatch: the systems act by different groups
        SystemNotNormal: either system fails `is_normal`
    """
    if a.group != b.group:
        raise GroupMismatch("Systems act by different groups")
    for side, system in (("a", a), ("b", b)):
        report = is_normal(system, limits)
        if not report:
            raise SystemNotNormal(side, report.diagnosis)
    if point_spectrum(a, limits).support != point_spectrum(b, limits).support:
        return None
    env_a = env_functor(PointedSystem(a, 0), limits)
    env_b = env_functor(PointedSystem(b, 0), limits)
    if len(set(env_a.evaluation)) != a.points:
        raise InvariantViolation("Normal system is not a rotation of its enveloping group")
    induced = compactification_morphism(env_a.compactification, env_b.compactification)
    if induced is None or not induced.is_injective:
        raise InvariantViolation("Equal spectra but different enveloping kernels")
    element_at = {x: h for h, x in enumerate(env_a.evaluation)}
    q = tuple(env_b.evaluation[induced(element_at[x])] for x in range(a.points))
    if len(set(q)) != b.points or not is_equivariant(a, b, q):
        raise InvariantViolation("Constructed map is not an equivariant bijection")
    return q


def equivariant_bijection(
    a: TopSystem,
    b: TopSystem,
    cap: int,
    compatible: Callable[[int, int], bool] | None = None,
) -> tuple[int, ...] | None:
    """Search for an equivariant bijection orbit by orbit.

    An orbit of ``a`` based at its smallest point maps onto an orbit of ``b``
    exactly when the base goes to a point with the same stabilizer.
    ``compatible(x, y)`` can further restrict where an orbit base may go.

    Raises:
        GroupMismatch: the systems act by different groups
        OrderCapExceeded: a non-transitive system exceeds ``cap`` points
    """
    if a.group != b.group:
        raise GroupMismatch("Systems act by different groups")
    if a.points != b.points:
        return None
    orbits_a, orbits_b = orbits(a), orbits(b)
    if len(orbits_a) > 1 and a.points > cap:
        raise OrderCapExceeded("Equivariant bijection search", a.points, cap)
    if sorted(map(len, orbits_a)) != sorted(map(len, orbits_b)):
        return None
    stabilizers_b = {y: stabilizer(b, y).members for y in range(b.points)}
    orbit_of_b = {y: k for k, orbit in enumerate(orbits_b) for y in orbit}

    def search(k: int, used: frozenset[int], mapping: dict[int, int]) -> dict[int, int] | None:
        if k == len(orbits_a):
            return mapping
        orbit = orbits_a[k]
        base = orbit[0]
        fixing = stabilizer(a, base).members
        for y in range(b.points):
            target = orbit_of_b[y]
            if target in used or len(orbits_b[target]) != len(orbit) or stabilizers_b[y] != fixing:
                continue
            if compatible is not None and not compatible(base, y):
                continue
            part = _orbit_map(a, base, b, y)
            if part is None:
                continue
            result = search(k + 1, used | {target}, {**mapping, **part})
            if result is not None:
                return result
        return None

    mapping = search(0, frozenset(), {})
    if mapping is None:
        return None
    q = tuple(mapping[x] for x in range(a.points))
    if not is_equivariant(a, b, q):
        raise InvariantViolation("Bijection search returned a non-equivariant map")
    return q


def brute_force_iso(
    a: TopSystem, b: TopSystem, limits: Limits | None = None
) -> tuple[int, ...] | None:
    """Isomorphism oracle that never looks at the spectrum.

    Raises:
        GroupMismatch: the systems act by different groups
        OrderCapExceeded: a non-transitive system exceeds the point cap
    """
    return equivariant_bijection(a, b, resolve_limits(limits).brute_force_points)


def pointed_iso(p: PointedSystem, q: PointedSystem) -> tuple[int, ...] | None:
    """Equivariant bijection of minimal systems sending base point to base point."""
    _require_minimal(p.system)
    _require_minimal(q.system)
    if p.system.group != q.system.group:
        raise GroupMismatch("Systems act by different groups")
    if p.system.points != q.system.points:
        return None
    mapping = _orbit_map(p.system, p.base, q.system, q.base)
    if mapping is None or len(mapping) != p.system.points:
        return None
    return tuple(mapping[x] for x in range(p.system.points))


def common_normal_extension(
    a: TopSystem, b: TopSystem, limits: Limits | None = None
) -> NormalExtension | None:
    """A normal system factoring onto both minimal systems, when their envelopes agree."""
    if a.group != b.group:
        raise GroupMismatch("Systems act by different groups")
    env_a = env_functor(PointedSystem(a, 0), limits)
    env_b = env_functor(PointedSystem(b, 0), limits)
    induced = compactification_morphism(env_a.compactification, env_b.compactification)
    if induced is None or not induced.is_injective:
        return None
    extension = rot_functor(env_a.compactification).system
    first = env_a.evaluation
    second = tuple(env_b.evaluation[induced(h)] for h in env_a.compactification.target.elements)
    if not (is_equivariant(extension, a, first) and is_equivariant(extension, b, second)):
        raise InvariantViolation("Factor maps from the normal extension are not equivariant")
    return NormalExtension(extension, first, second)


def realize_spectrum(table: CharacterTable, sigma: GrouplikeSubset, limits: Limits | None = None) -> TopSystem:
    """The rotation on Tan(σ), a normal system whose spectrum support is σ."""
    system = rot_functor(tan_functor(table, sigma)).system
    report = is_normal(system, limits)
    if report.spectrum.support != sigma.members:
        raise InvariantViolation(
            f"Realized support {list(report.spectrum.support)} differs from {list(sigma.members)}"
        )
    if not report:
        raise InvariantViolation(f"Realized system is not normal: {report.diagnosis}")
    return system


def spectrum_monotonic_under_factor(
    a: TopSystem, b: TopSystem, q: Sequence[int], limits: Limits | None = None
) -> bool:
    """Whether a factor map ``q: a → b`` only shrinks the spectrum.

    Raises:
        NotEquivariant: q does not commute with the actions
        NotSurjective: q misses a point of b
    """
    if not is_equivariant(a, b, q):
        raise NotEquivariant("Factor map does not commute with the actions")
    if len(set(q)) != b.points:
        raise NotSurjective(f"Factor map hits {len(set(q))} of {b.points} points")
    upper = point_spectrum(a, limits).multiplicities
    lower = point_spectrum(b, limits).multiplicities
    return all(m <= n for m, n in zip(lower, upper))


# ---------------------------------------------------------------------------
# Gassmann pairs
# ---------------------------------------------------------------------------


def gassmann_pairs(group: FiniteGroup, limits: Limits | None = None) -> list[GassmannPair]:
    """All pairs of non-conjugate subgroups whose coset actions share a permutation character.

    Pairs come fewest points first, then in subgroup representative order.

    Raises:
        OrderCapExceeded: the group is too large for subgroup enumeration
    """
    start = time.time()
    representatives = subgroups_up_to_conjugacy(group, limits)
    by_order: dict[int, list[Subgroup]] = {}
    for h in representatives:
        by_order.setdefault(h.order, []).append(h)
    pairs = []
    for order in sorted(by_order, reverse=True):
        candidates = by_order[order]
        systems = [coset_action(group, h) for h in candidates]
        characters = [permutation_character(s).values for s in systems]
        for i in range(len(candidates)):
            for j in range(i + 1, len(candidates)):
                if characters[i] != characters[j]:
                    continue
                if brute_force_iso(systems[i], systems[j], limits) is not None:
                    raise InvariantViolation("Coset actions of non-conjugate subgroups are isomorphic")
                pairs.append(GassmannPair(candidates[i], candidates[j], systems[i], systems[j]))
    logger.info(
        "Found %d Gassmann pairs in a group of order %d in %.2f seconds",
        len(pairs),
        group.order,
        time.time() - start,
    )
    return pairs


def gassmann_search(group: FiniteGroup, limits: Limits | None = None) -> GassmannPair | None:
    pairs = gassmann_pairs(group, limits)
    return pairs[0] if pairs else None
