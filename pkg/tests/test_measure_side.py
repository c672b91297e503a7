from fractions import Fraction

import pytest

from hvnfinite.corpus import group_dihedral
from hvnfinite.duality import identity_compactification
from hvnfinite.dynsys import (
    PointedSystem,
    coset_action,
    disjoint_union,
    env_functor,
    point_spectrum,
    regular_action,
    relabel_system,
    rot_functor,
    transitive_actions,
    trivial_action,
)
from hvnfinite.errors import GroupMismatch, MeasureError, NotEquivariant, NotErgodic, NotMinimal
from hvnfinite.group_core import all_subgroups, group_cyclic
from hvnfinite.measure_side import (
    MeasureSystem,
    is_ergodic,
    meas_functor,
    measure_iso,
    measure_point_spectrum,
    measure_quasi_rotation,
    pushforward,
    top_functor,
    verify_equivalence_roundtrips,
)

THIRD = Fraction(1, 3)


def natural_action(s3):
    return coset_action(s3, next(h for h in all_subgroups(s3) if h.order == 2))


def test_meas_equips_the_uniform_measure(s3):
    natural = natural_action(s3)
    measure = meas_functor(natural)
    assert measure.weights == (THIRD, THIRD, THIRD)
    assert is_ergodic(measure)
    assert top_functor(measure) == natural
    assert measure_point_spectrum(measure).multiplicities == point_spectrum(natural).multiplicities


def test_meas_needs_a_minimal_system():
    with pytest.raises(NotMinimal):
        meas_functor(trivial_action(group_cyclic(2), 2))


def test_top_needs_an_ergodic_system():
    c2 = group_cyclic(2)
    system = trivial_action(c2, 2)
    measure = MeasureSystem(c2, 2, (Fraction(1, 4), Fraction(3, 4)), system.action)
    assert not is_ergodic(measure)
    with pytest.raises(NotErgodic):
        top_functor(measure)


@pytest.mark.parametrize(
    "weights",
    [
        (Fraction(1, 2), Fraction(1, 4)),
        (Fraction(1), Fraction(0)),
        (Fraction(1, 4), Fraction(3, 4)),
    ],
    ids=["not-probability", "zero-atom", "not-invariant"],
)
def test_invalid_weights(weights):
    c2 = group_cyclic(2)
    swap = regular_action(c2)
    with pytest.raises(MeasureError):
        MeasureSystem(c2, 2, weights, swap.action)


def test_measure_isomorphism_respects_weights():
    c2 = group_cyclic(2)
    pair = disjoint_union(regular_action(c2), regular_action(c2))
    light, heavy = Fraction(1, 6), Fraction(1, 3)
    a = MeasureSystem(c2, 4, (light, light, heavy, heavy), pair.action)
    b = MeasureSystem(c2, 4, (heavy, heavy, light, light), pair.action)
    q = measure_iso(a, b)
    assert q is not None
    assert all(a.weights[x] == b.weights[q[x]] for x in range(4))
    c = MeasureSystem(c2, 4, (Fraction(1, 8),) * 2 + (Fraction(3, 8),) * 2, pair.action)
    assert measure_iso(a, c) is None


def test_measure_isomorphism_of_relabeled_systems(s3):
    natural = natural_action(s3)
    relabeled = relabel_system(natural, [1, 2, 0])
    assert measure_iso(meas_functor(natural), meas_functor(relabeled)) is not None
    with pytest.raises(GroupMismatch):
        measure_iso(meas_functor(natural), meas_functor(regular_action(group_cyclic(6))))


def test_pushforward_of_haar_measure(s3):
    natural = natural_action(s3)
    envelope = env_functor(PointedSystem(natural, 0))
    rotation = rot_functor(envelope.compactification).system
    pushed = pushforward(meas_functor(rotation), envelope.evaluation, natural)
    assert pushed.weights == (THIRD, THIRD, THIRD)
    with pytest.raises(NotEquivariant):
        pushforward(meas_functor(rotation), [0] * 6, natural)


def test_measure_quasi_rotation(s3):
    stabilizer = next(h for h in all_subgroups(s3) if h.order == 2)
    measure = measure_quasi_rotation(identity_compactification(s3), stabilizer)
    assert measure.atoms == 3
    assert sum(measure.weights) == 1


def test_roundtrips_over_transitive_actions(s3):
    systems = transitive_actions(s3) + transitive_actions(group_dihedral(4))
    assert verify_equivalence_roundtrips(systems) == []
    assert verify_equivalence_roundtrips(systems, max_workers=1) == []


def test_roundtrips_skip_non_minimal_systems():
    assert verify_equivalence_roundtrips([trivial_action(group_cyclic(2), 3)]) == []
