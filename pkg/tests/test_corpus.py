import itertools
import random

import pytest

from hvnfinite.corpus import (
    abelian_groups,
    abelian_invariants,
    builtin_group,
    corpus_groups,
    group_alternating,
    group_dihedral,
    group_gl32,
    group_quaternion,
    random_relabeling,
)
from hvnfinite.errors import GroupError
from hvnfinite.group_core import group_cyclic, group_direct_product, group_is_isomorphic


def test_abelian_invariants():
    invariants = abelian_invariants(8)
    assert len(invariants) == 11
    assert {(8,), (4, 2), (2, 2, 2)} <= set(invariants)
    assert invariants[0] == ()


def test_abelian_group_names():
    names = [entry.name for entry in abelian_groups(4)]
    assert names == ["C1", "C2", "C3", "C2xC2", "C4"]


def test_corpus_contents():
    names = [entry.name for entry in corpus_groups(24)]
    assert len(names) == len(set(names))
    assert names[-1] == "GL(3,2)"
    assert {"S3", "Q8", "D4", "A4", "S4", "Dic6", "C2xC2xS3"} <= set(names)
    assert {"C3xD4", "C3xQ8", "C2xDic3"} <= set(names)
    orders = [entry.group.order for entry in corpus_groups(24)[:-1]]
    assert orders == sorted(orders)
    assert max(orders) == 24


def test_direct_products_of_order_24():
    entries = {entry.name: entry.group for entry in corpus_groups(24, include_gl32=False)}
    assert group_is_isomorphic(
        entries["C3xD4"], group_direct_product(group_cyclic(3), group_dihedral(4))
    ) is not None
    assert group_is_isomorphic(
        entries["C3xQ8"], group_direct_product(group_cyclic(3), group_quaternion(8))
    ) is not None
    assert group_is_isomorphic(
        entries["C2xDic3"], group_direct_product(group_cyclic(2), group_quaternion(12))
    ) is not None
    assert not entries["C3xD4"].is_abelian
    assert entries["C3xQ8"].element_orders.count(2) == 1


@pytest.mark.slow
def test_order_24_members_are_pairwise_non_isomorphic():
    order_24 = [e for e in corpus_groups(24, include_gl32=False) if e.group.order == 24]
    non_abelian = [e for e in order_24 if not e.group.is_abelian]
    assert len(non_abelian) == 9
    for first, second in itertools.combinations(order_24, 2):
        assert group_is_isomorphic(first.group, second.group) is None, (first.name, second.name)


def test_gl32_only_joins_large_corpora():
    assert "GL(3,2)" not in [entry.name for entry in corpus_groups(12)]
    assert "GL(3,2)" not in [entry.name for entry in corpus_groups(24, include_gl32=False)]


def test_builders():
    assert group_dihedral(5).order == 10
    assert not group_dihedral(5).is_abelian
    assert builtin_group("dihedral:2").is_abelian
    assert builtin_group("dihedral:2").order == 4
    assert group_alternating(4).order == 12
    q8 = group_quaternion(8)
    assert q8.order == 8
    assert q8.element_orders.count(2) == 1
    assert group_quaternion(12).order == 12
    assert group_is_isomorphic(q8, group_dihedral(4)) is None


def test_gl32_group():
    gl32 = group_gl32()
    assert gl32.order == 168
    assert sorted(set(gl32.element_orders)) == [1, 2, 3, 4, 7]


@pytest.mark.parametrize("group_id", ["cyclic:x", "torus:3", "quaternion:6"])
def test_unknown_builtin(group_id):
    with pytest.raises(GroupError):
        builtin_group(group_id)


def test_random_relabeling_is_isomorphic():
    a4 = group_alternating(4)
    relabeled = random_relabeling(a4, random.Random(7))
    assert relabeled.order == 12
    assert group_is_isomorphic(a4, relabeled) is not None
