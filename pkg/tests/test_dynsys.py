import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvnfinite.char_theory import character_table
from hvnfinite.corpus import group_dihedral, group_gl32, group_symmetric
from hvnfinite.duality import compactification_from_normal, enumerate_grouplike
from hvnfinite.dynsys import (
    PointedSystem,
    TopSystem,
    brute_force_iso,
    common_normal_extension,
    coset_action,
    disjoint_union,
    gassmann_search,
    is_equivariant,
    is_minimal,
    is_normal,
    isotypic_multiplicities,
    mult_bound_check,
    normal_iso_decision,
    orbits,
    point_spectrum,
    pointed_iso,
    quasi_rotation_model,
    realize_spectrum,
    regular_action,
    relabel_system,
    rot_functor,
    spectrum_monotonic_under_factor,
    system_from_generators,
    system_from_table,
    transitive_actions,
    trivial_action,
    verify_env_rot_roundtrip,
    verify_rot_env_roundtrip,
)
from hvnfinite.errors import (
    DynamicsError,
    GroupMismatch,
    NotEquivariant,
    NotMinimal,
    NotSurjective,
    OrderCapExceeded,
    RelationViolation,
    SystemNotNormal,
)
from hvnfinite.group_core import (
    all_subgroups,
    are_conjugate_subgroups,
    group_cyclic,
    normal_subgroups,
)


def natural_action(s3):
    return coset_action(s3, next(h for h in all_subgroups(s3) if h.order == 2))


def half_turn_system(c4):
    # C4 rotating two points through its quotient by {0, 2}
    halves = next(n for n in normal_subgroups(c4) if n.order == 2)
    return rot_functor(compactification_from_normal(c4, halves)).system


def test_regular_action_is_normal(s3):
    report = is_normal(regular_action(s3))
    assert report
    assert report.minimal
    assert report.violations == ()
    assert report.spectrum.multiplicities == (1, 1, 2)
    assert report.spectrum.dimension() == 6


def test_natural_s3_action_is_minimal_but_not_normal(s3):
    report = is_normal(natural_action(s3))
    assert not report
    assert report.minimal
    assert report.spectrum.multiplicities == (1, 0, 1)
    assert report.violations == ("mult(std)=1<2", "support not grouplike")
    assert report.diagnosis == "mult(std)=1<2"
    assert report.grouplike.condition == "tensor"


def test_trivial_action_is_not_minimal():
    c2 = group_cyclic(2)
    system = trivial_action(c2, 2)
    assert not is_minimal(system)
    report = is_normal(system)
    assert not report.minimal
    assert report.violations[0] == "mult(triv)=2>1"
    with pytest.raises(NotMinimal):
        mult_bound_check(system)


def test_multiplicity_bound_on_transitive_actions():
    s4 = group_symmetric(4)
    actions = transitive_actions(s4)
    assert len(actions) == 11
    assert all(mult_bound_check(system) for system in actions)


def test_transitive_actions_of_s3(s3):
    assert [s.points for s in transitive_actions(s3)] == [1, 2, 3, 6]
    assert [s.points for s in transitive_actions(s3, max_points=3)] == [1, 2, 3]


def test_identity_must_act_trivially():
    with pytest.raises(DynamicsError):
        TopSystem(group_cyclic(2), 2, ((1, 0), (0, 1)))


def test_generator_images_must_respect_relations(c4):
    with pytest.raises(RelationViolation):
        system_from_generators(c4, [1], [(1, 2, 0)], 3)
    system = system_from_generators(c4, [1], [(1, 2, 3, 0)], 4)
    assert system.action == regular_action(c4).action


def test_element_table_must_be_a_homomorphism():
    with pytest.raises(RelationViolation):
        system_from_table(group_cyclic(2), [(0, 1, 2), (1, 2, 0)], 3)


def test_union_and_relabeling(s3):
    natural = natural_action(s3)
    union = disjoint_union(natural, regular_action(s3))
    assert union.points == 9
    assert [len(o) for o in orbits(union)] == [3, 6]
    relabeled = relabel_system(natural, [2, 0, 1])
    assert brute_force_iso(natural, relabeled) is not None
    with pytest.raises(GroupMismatch):
        disjoint_union(natural, regular_action(group_cyclic(6)))


def test_spectral_decision_on_relabeled_regular_systems(c4):
    regular = regular_action(c4)
    relabeled = relabel_system(regular, [2, 3, 1, 0])
    q = normal_iso_decision(regular, relabeled)
    assert q is not None
    assert is_equivariant(regular, relabeled, q)
    assert sorted(q) == [0, 1, 2, 3]


def test_spectral_decision_separates_supports(c4):
    assert normal_iso_decision(regular_action(c4), half_turn_system(c4)) is None
    assert brute_force_iso(regular_action(c4), half_turn_system(c4)) is None


def test_spectral_decision_needs_normal_systems(s3):
    natural = natural_action(s3)
    with pytest.raises(SystemNotNormal) as excinfo:
        normal_iso_decision(natural, natural)
    assert excinfo.value.side == "a"
    with pytest.raises(SystemNotNormal) as excinfo:
        normal_iso_decision(regular_action(s3), natural)
    assert excinfo.value.side == "b"


def test_spectral_decision_needs_one_group(c4):
    with pytest.raises(GroupMismatch):
        normal_iso_decision(regular_action(c4), regular_action(group_cyclic(2)))


def test_brute_force_cap_on_non_transitive_systems():
    c2 = group_cyclic(2)
    big = trivial_action(c2, 17)
    with pytest.raises(OrderCapExceeded):
        brute_force_iso(big, big)


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(6)))
def test_decision_agrees_with_brute_force(relabeling):
    regular = regular_action(group_cyclic(6))
    relabeled = relabel_system(regular, relabeling)
    q = normal_iso_decision(regular, relabeled)
    assert q is not None
    assert is_equivariant(regular, relabeled, q)
    assert brute_force_iso(regular, relabeled) is not None


def test_base_point_matters_only_for_non_normal_systems(s3):
    regular = regular_action(s3)
    assert pointed_iso(PointedSystem(regular, 0), PointedSystem(regular, 4)) is not None
    natural = natural_action(s3)
    assert pointed_iso(PointedSystem(natural, 0), PointedSystem(natural, 1)) is None
    assert pointed_iso(PointedSystem(natural, 0), PointedSystem(natural, 0)) == (0, 1, 2)


def test_base_point_range(s3):
    with pytest.raises(DynamicsError):
        PointedSystem(natural_action(s3), 3)


def test_env_rot_roundtrip(s3):
    regular = regular_action(s3)
    for base in (0, 4):
        q = verify_env_rot_roundtrip(PointedSystem(regular, base))
        assert q is not None
        assert q[0] == base
    assert verify_env_rot_roundtrip(PointedSystem(natural_action(s3), 0)) is None


def test_rot_env_roundtrip(s3):
    for normal in normal_subgroups(s3):
        assert verify_rot_env_roundtrip(compactification_from_normal(s3, normal))


def test_quasi_rotation_model_of_natural_action(s3):
    natural = natural_action(s3)
    model = quasi_rotation_model(natural)
    assert model.compactification.target.order == 6
    assert model.stabilizer.order == 2
    assert model.system.points == 3
    assert is_equivariant(natural, model.system, model.isomorphism)


def test_common_normal_extension(s3):
    natural = natural_action(s3)
    other = coset_action(s3, [h for h in all_subgroups(s3) if h.order == 2][1])
    extension = common_normal_extension(natural, other)
    assert extension is not None
    assert extension.system.points == 6
    assert is_normal(extension.system)
    assert spectrum_monotonic_under_factor(extension.system, natural, extension.first_factor)
    assert spectrum_monotonic_under_factor(extension.system, other, extension.second_factor)


def test_no_common_extension_for_different_envelopes(c4):
    assert common_normal_extension(regular_action(c4), half_turn_system(c4)) is None


def test_factor_map_errors(s3):
    regular = regular_action(s3)
    with pytest.raises(NotEquivariant):
        spectrum_monotonic_under_factor(regular, natural_action(s3), [0] * 6)
    c2 = group_cyclic(2)
    with pytest.raises(NotSurjective):
        spectrum_monotonic_under_factor(trivial_action(c2, 1), trivial_action(c2, 2), [0])


def test_realize_every_grouplike_subset(s3):
    table = character_table(s3)
    systems = [realize_spectrum(table, sigma) for sigma in enumerate_grouplike(table)]
    assert [s.points for s in systems] == [1, 2, 6]
    for sigma, system in zip(enumerate_grouplike(table), systems):
        assert point_spectrum(system).support == sigma.members


@pytest.mark.parametrize(
    "build",
    [natural_action, regular_action, lambda s3: regular_action(group_cyclic(4))],
    ids=["natural-s3", "regular-s3", "regular-c4"],
)
def test_isotypic_ranks_match_the_spectrum(s3, build):
    system = build(s3)
    assert isotypic_multiplicities(system) == point_spectrum(system).multiplicities


def test_isotypic_cap():
    with pytest.raises(OrderCapExceeded):
        isotypic_multiplicities(regular_action(group_dihedral(6)))


def test_no_gassmann_pairs_in_small_groups(s3):
    assert gassmann_search(s3) is None
    assert gassmann_search(group_dihedral(4)) is None
    assert gassmann_search(group_cyclic(8)) is None


@pytest.mark.slow
def test_gl32_gassmann_pair():
    gl32 = group_gl32()
    pair = gassmann_search(gl32)
    assert pair is not None
    assert pair.first.points == pair.second.points == 7
    assert point_spectrum(pair.first).multiplicities == point_spectrum(pair.second).multiplicities
    assert brute_force_iso(pair.first, pair.second) is None
    assert are_conjugate_subgroups(gl32, pair.first_subgroup, pair.second_subgroup) is None
    assert not is_normal(pair.first)
