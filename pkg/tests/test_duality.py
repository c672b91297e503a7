import itertools

import pytest

from hvnfinite.char_theory import character_table, is_real_row
from hvnfinite.corpus import builtin_group, group_dihedral, group_quaternion, product_of_cyclics
from hvnfinite.duality import (
    GrouplikeSubset,
    cdual,
    compactification_from_normal,
    compactification_morphism,
    ddual,
    dual_subgroups,
    enumerate_grouplike,
    grouplike_closure,
    identity_compactification,
    is_grouplike,
    normal_subgroup_of,
    pontryagin_dual,
    rep_functor,
    tan_functor,
    translation_properties,
    trivial_compactification,
    verify_abelian_coherence,
    verify_grouplike_bijection,
    verify_rep_tan_roundtrip,
    verify_tan_rep_roundtrip,
)
from hvnfinite.errors import GroupError, NotAbelian, OrderCapExceeded
from hvnfinite.group_core import group_cyclic, group_is_isomorphic, normal_subgroups
from hvnfinite.utils.config import Limits

SMALL_GROUPS = ["symmetric:3", "dihedral:4", "quaternion:8", "alternating:4", "cyclic:6", "dihedral:2"]


def test_s3_grouplike_subsets(s3):
    table = character_table(s3)
    assert [s.members for s in enumerate_grouplike(table)] == [(0,), (0, 1), (0, 1, 2)]


def test_grouplike_failures_name_their_condition(s3):
    table = character_table(s3)
    missing_trivial = is_grouplike(table, [1])
    assert not missing_trivial
    assert missing_trivial.condition == "trivial"

    open_tensor = is_grouplike(table, [0, 2])
    assert not open_tensor
    assert open_tensor.condition == "tensor"
    assert open_tensor.witness == (2, 2, 1)
    assert "chi1" in open_tensor.message

    assert is_grouplike(table, [0, 1])


def test_conjugate_condition():
    table = character_table(group_cyclic(4))
    complex_row = next(i for i in range(table.size) if not is_real_row(table, i))
    check = is_grouplike(table, [0, complex_row])
    assert check.condition == "conjugate"


def test_out_of_range_irrep(s3):
    with pytest.raises(GroupError):
        is_grouplike(character_table(s3), [0, 7])


def test_closure_is_smallest_grouplike_superset(s3):
    table = character_table(s3)
    assert grouplike_closure(table, [2]).members == (0, 1, 2)
    assert grouplike_closure(table, []).members == (0,)


def test_grouplike_cap(s3):
    with pytest.raises(OrderCapExceeded):
        enumerate_grouplike(character_table(s3), Limits(grouplike=2))


@pytest.mark.parametrize("group_id", SMALL_GROUPS)
def test_grouplike_subsets_match_normal_subgroups(group_id):
    table = character_table(builtin_group(group_id))
    assert verify_grouplike_bijection(table) == []


@pytest.mark.parametrize("group_id", SMALL_GROUPS)
def test_rep_and_tan_invert_each_other(group_id):
    group = builtin_group(group_id)
    table = character_table(group)
    for sigma in enumerate_grouplike(table):
        assert verify_rep_tan_roundtrip(table, sigma)
        assert translation_properties(table, sigma).order_matches
    for normal in normal_subgroups(group):
        morphism = verify_tan_rep_roundtrip(compactification_from_normal(group, normal))
        assert morphism is not None
        assert morphism.validate().is_injective


def test_translation_properties_of_s3(s3):
    table = character_table(s3)
    full, sign, trivial = (
        GrouplikeSubset(table, (0, 1, 2)),
        GrouplikeSubset(table, (0, 1)),
        GrouplikeSubset(table, (0,)),
    )
    assert translation_properties(table, full).predicted_order == 6
    assert not translation_properties(table, full).abelian
    assert translation_properties(table, sign).abelian
    assert translation_properties(table, sign).actual_order == 2
    assert translation_properties(table, trivial).trivial


def test_tan_of_sign_subset_has_alternating_kernel(s3):
    table = character_table(s3)
    compactification = tan_functor(table, GrouplikeSubset(table, (0, 1)))
    assert compactification.target.order == 2
    assert compactification.kernel.order == 3
    assert normal_subgroup_of(GrouplikeSubset(table, (0, 1))).order == 3


def test_compactification_morphisms_go_down_the_lattice(s3):
    identity = identity_compactification(s3)
    trivial = trivial_compactification(s3)
    down = compactification_morphism(identity, trivial)
    assert down is not None
    assert down.validate().target.order == 1
    assert compactification_morphism(trivial, identity) is None


def test_rep_reverses_morphisms():
    group = group_dihedral(4)
    compactifications = [compactification_from_normal(group, n) for n in normal_subgroups(group)]
    reps = [set(rep_functor(c).members) for c in compactifications]
    for (i, first), (j, second) in itertools.product(enumerate(compactifications), repeat=2):
        exists = compactification_morphism(first, second) is not None
        assert exists == (reps[j] <= reps[i])


def test_pontryagin_dual_of_nonabelian_group(s3):
    with pytest.raises(NotAbelian):
        pontryagin_dual(s3)


def test_dual_group_is_isomorphic_to_group():
    klein = product_of_cyclics((2, 2))
    dual = pontryagin_dual(klein)
    assert group_is_isomorphic(dual.dual, klein) is not None
    assert group_is_isomorphic(dual.dual, group_cyclic(4)) is None
    assert dual.exponents[0] == (0, 0, 0, 0)


@pytest.mark.parametrize("orders", [(4,), (2, 2), (6,), (2, 4), (3, 3), (2, 2, 2)])
def test_abelian_coherence(orders):
    assert verify_abelian_coherence(product_of_cyclics(orders)) == []


def test_ddual_inverts_cdual():
    dual = pontryagin_dual(group_cyclic(6))
    subgroups = dual_subgroups(dual)
    assert [s.order for s in subgroups] == [1, 2, 3, 6]
    for sigma in subgroups:
        compactification = cdual(dual, sigma)
        assert compactification.target.order == sigma.order
        assert ddual(compactification).members == sigma.members


def test_quaternion_and_dihedral_duals_look_alike():
    quaternion = character_table(group_quaternion(8))
    dihedral = character_table(group_dihedral(4))
    assert quaternion.degrees == dihedral.degrees == (1, 1, 1, 1, 2)
    assert len(enumerate_grouplike(quaternion)) == len(enumerate_grouplike(dihedral)) == 6
