"""Contains finite measure-preserving systems and their passage to and from topological systems.

A measure system is a group acting on finitely many atoms with rational
weights that every group element preserves. Morphisms are atom maps; between
ergodic systems the isomorphisms are the weight-preserving equivariant
bijections.
"""

import concurrent.futures
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hvnfinite.duality import Compactification
from hvnfinite.dynsys import (
    PointedSystem,
    PointSpectrum,
    TopSystem,
    env_functor,
    equivariant_bijection,
    is_equivariant,
    is_minimal,
    orbits,
    point_spectrum,
    quasi_rotation,
    rot_functor,
)
from hvnfinite.errors import (
    GroupMismatch,
    MeasureError,
    NotEquivariant,
    NotErgodic,
    NotMinimal,
)
from hvnfinite.group_core import FiniteGroup, Permutation, Subgroup
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasureSystem:
    """A group acting on weighted atoms; the weights are a preserved probability vector."""

    group: FiniteGroup
    atoms: int
    weights: tuple[Fraction, ...]
    action: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.atoms:
            raise MeasureError(f"{len(self.weights)} weights for {self.atoms} atoms")
        if any(w <= 0 for w in self.weights):
            raise MeasureError("Atom weights must be positive")
        if sum(self.weights, Fraction(0)) != 1:
            raise MeasureError(f"Weights sum to {sum(self.weights, Fraction(0))}, not 1")
        if len(self.action) != self.group.order:
            raise MeasureError("Action must list one permutation per group element")
        for t, perm in enumerate(self.action):
            for x, y in enumerate(perm):
                if self.weights[y] != self.weights[x]:
                    raise MeasureError(
                        f"Element {t} moves atom {x} of weight {self.weights[x]} "
                        f"to atom {y} of weight {self.weights[y]}"
                    )

    def underlying(self) -> TopSystem:
        """The action with the weights forgotten, ergodic or not."""
        return TopSystem(self.group, self.atoms, self.action)

    def export(self) -> dict:
        return {
            "group_hash": self.group.content_hash,
            "atoms": self.atoms,
            "weights": [str(w) for w in self.weights],
            "action": [list(perm) for perm in self.action],
        }


def meas_functor(system: TopSystem) -> MeasureSystem:
    """Equip a minimal system with its unique invariant measure, the uniform one.

    Raises:
        NotMinimal: the system has more than one orbit
    """
    if not is_minimal(system):
        raise NotMinimal(f"System on {system.points} points is not minimal")
    weight = Fraction(1, system.points)
    return MeasureSystem(system.group, system.points, (weight,) * system.points, system.action)


def is_ergodic(measure: MeasureSystem) -> bool:
    """Only orbit-constant functions are fixed, so ergodic means a single orbit."""
    return is_minimal(measure.underlying())


def top_functor(measure: MeasureSystem) -> TopSystem:
    """Forget the weights of an ergodic system.

    Raises:
        NotErgodic: the system has more than one orbit
    """
    if not is_ergodic(measure):
        raise NotErgodic(f"Measure system has {len(orbits(measure.underlying()))} orbits")
    return measure.underlying()


def measure_iso(
    a: MeasureSystem, b: MeasureSystem, limits: Limits | None = None
) -> tuple[int, ...] | None:
    """Search for a weight-preserving equivariant bijection of atoms.

    Raises:
        GroupMismatch: the systems act by different groups
        OrderCapExceeded: a non-ergodic system exceeds the atom cap
    """
    if a.group != b.group:
        raise GroupMismatch("Measure systems act by different groups")
    if a.atoms != b.atoms or sorted(a.weights) != sorted(b.weights):
        return None
    cap = resolve_limits(limits).measure_atoms
    return equivariant_bijection(
        a.underlying(),
        b.underlying(),
        cap,
        compatible=lambda x, y: a.weights[x] == b.weights[y],
    )


def measure_quasi_rotation(compactification: Compactification, subgroup: Subgroup) -> MeasureSystem:
    """The quasi-rotation on the cosets of ``subgroup`` with the pushed-forward Haar measure."""
    return meas_functor(quasi_rotation(compactification, subgroup))


def measure_point_spectrum(measure: MeasureSystem, limits: Limits | None = None) -> PointSpectrum:
    return point_spectrum(measure.underlying(), limits)


def pushforward(measure: MeasureSystem, q: Sequence[int], target: TopSystem) -> MeasureSystem:
    """Push the weights forward along an equivariant surjection onto ``target``.

    Raises:
        NotEquivariant: q does not commute with the actions
        MeasureError: q is not onto
    """
    if not is_equivariant(measure.underlying(), target, q):
        raise NotEquivariant("Pushforward map does not commute with the actions")
    weights = [Fraction(0)] * target.points
    for x, w in enumerate(measure.weights):
        weights[q[x]] += w
    return MeasureSystem(target.group, target.points, tuple(weights), target.action)


def _roundtrip_failures(system: TopSystem, limits: Limits | None) -> list[str]:
    failures = []
    label = f"system on {system.points} points (group order {system.group.order})"
    measure = meas_functor(system)
    back = top_functor(measure)
    if back != system or equivariant_bijection(back, system, system.points) is None:
        failures.append(f"Top(Meas(·)) differs from the {label}")
    again = meas_functor(top_functor(measure))
    if measure_iso(again, measure, limits) is None:
        failures.append(f"Meas(Top(·)) is not isomorphic to Meas of the {label}")
    if measure_point_spectrum(measure, limits).multiplicities != point_spectrum(system, limits).multiplicities:
        failures.append(f"Point spectrum changes under Meas for the {label}")

    envelope = env_functor(PointedSystem(system, 0), limits)
    rotation = rot_functor(envelope.compactification).system
    pushed = pushforward(meas_functor(rotation), envelope.evaluation, system)
    if pushed.weights != measure.weights:
        failures.append(f"Evaluation factor does not push the Haar measure onto the {label}")
    return failures


def verify_equivalence_roundtrips(
    systems: Iterable[TopSystem], limits: Limits | None = None, max_workers: int = 4
) -> list[str]:
    """Check Top∘Meas and Meas∘Top on every minimal system, and functoriality on its evaluation factor.

    Returns:
        list: failure messages, empty when everything holds
    """
    corpus = [s for s in systems if is_minimal(s)]
    if not corpus:
        return []
    logger.info("Checking measure/topology roundtrips on %d systems", len(corpus))
    start = time.time()
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        results = list(executor.map(lambda s: _roundtrip_failures(s, limits), corpus))
    logger.info("Checked roundtrips in %.2f seconds", time.time() - start)
    return [failure for failures in results for failure in failures]
