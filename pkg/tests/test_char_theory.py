import itertools
from collections import Counter

import numpy as np
import pytest

from hvnfinite.char_theory import (
    character_table,
    conjugate_irrep,
    galois_orbits,
    inner_product,
    irrep_name,
    is_real_row,
    kernel_of_irrep,
    permutation_character,
    regular_character,
    standard_irrep,
    tensor_decompose,
    trivial_character,
    verify_table,
)
from hvnfinite.corpus import (
    corpus_groups,
    group_alternating,
    group_dihedral,
    group_gl32,
    group_symmetric,
)
from hvnfinite.dynsys import coset_action
from hvnfinite.errors import GroupMismatch, OrderCapExceeded
from hvnfinite.group_core import all_subgroups, group_cyclic
from hvnfinite.utils.config import Limits


def regular_matrices(group):
    matrices = []
    for g in group.elements:
        m = np.zeros((group.order, group.order))
        for x in group.elements:
            m[group.mul(g, x), x] = 1
        matrices.append(m)
    return matrices


def isotypic_projection(table, i, matrices):
    total = sum(
        np.conj(table.value(i, g).to_complex()) * matrices[g] for g in table.group.elements
    )
    return table.degrees[i] * total / table.group.order


def assert_rows_project_the_regular_representation(table):
    matrices = regular_matrices(table.group)
    projections = [isotypic_projection(table, i, matrices) for i in range(table.size)]
    for i, p in enumerate(projections):
        assert np.allclose(p @ p, p, atol=1e-9)
        assert round(np.trace(p).real) == table.degrees[i] ** 2
        for j in range(i + 1, table.size):
            assert np.allclose(p @ projections[j], 0, atol=1e-9)
    assert np.allclose(sum(projections), np.eye(table.group.order), atol=1e-9)


def test_s3_table(s3):
    table = character_table(s3)
    assert table.degrees == (1, 1, 2)
    assert table.class_sizes == (1, 2, 3)
    assert verify_table(table) == []
    assert table.rows[0] == tuple([1, 1, 1])
    assert list(table.rows[1]) == [1, 1, -1]
    assert list(table.rows[2]) == [2, -1, 0]


def test_s3_standard_character_by_element_type(s3):
    table = character_table(s3)
    transposition = s3.element_orders.index(2)
    three_cycle = s3.element_orders.index(3)
    assert (table.value(2, 0), table.value(2, transposition), table.value(2, three_cycle)) == (2, 0, -1)


def test_s3_rows_agree_with_numeric_projections(s3):
    assert_rows_project_the_regular_representation(character_table(s3))


@pytest.mark.parametrize("entry", corpus_groups(12), ids=lambda entry: entry.name)
def test_corpus_tables_are_orthogonal(entry):
    table = character_table(entry.group)
    assert verify_table(table) == []
    assert table.degrees[0] == 1
    assert list(table.degrees[1:]) == sorted(table.degrees[1:])
    assert_rows_project_the_regular_representation(table)


def test_trivial_group_table():
    table = character_table(group_cyclic(1))
    assert table.size == 1
    assert table.rows == ((1,),)


def test_cyclic_table_has_conjugate_pairs():
    table = character_table(group_cyclic(4))
    assert table.degrees == (1, 1, 1, 1)
    non_real = [i for i in range(table.size) if not is_real_row(table, i)]
    assert len(non_real) == 2
    first, second = non_real
    assert conjugate_irrep(table, first) == second
    assert conjugate_irrep(table, second) == first
    assert sorted(len(orbit) for orbit in galois_orbits(table)) == [1, 1, 2]


def test_s3_tensor_products(s3):
    table = character_table(s3)
    assert tensor_decompose(table, 2, 2) == {0: 1, 1: 1, 2: 1}
    assert tensor_decompose(table, 1, 2) == {2: 1}
    assert tensor_decompose(table, 1, 1) == {0: 1}
    assert all(is_real_row(table, i) for i in range(table.size))


def test_regular_character_contains_every_irrep_by_degree(s3):
    table = character_table(s3)
    regular = regular_character(s3)
    for i in range(table.size):
        assert inner_product(regular, table.character(i)) == table.degrees[i]
    assert inner_product(trivial_character(s3), table.character(0)) == 1


def test_natural_action_character(s3):
    stabilizer = next(h for h in all_subgroups(s3) if h.order == 2)
    chi = permutation_character(coset_action(s3, stabilizer))
    table = character_table(s3)
    assert [inner_product(chi, table.character(i)) for i in range(3)] == [1, 0, 1]


def test_inner_product_needs_one_group(s3):
    with pytest.raises(GroupMismatch):
        inner_product(trivial_character(s3), trivial_character(group_cyclic(6)))


def test_sign_kernel_is_alternating(s3):
    table = character_table(s3)
    assert kernel_of_irrep(table, 1).order == 3
    assert kernel_of_irrep(table, 2).order == 1
    assert kernel_of_irrep(table, 0).order == 6


def test_table_export_is_deterministic(s3):
    first = character_table(s3)
    second = character_table(s3)
    assert first.content_hash == second.content_hash
    export = first.export()
    assert export["degrees"] == [1, 1, 2]
    assert export["content_hash"] == first.content_hash
    assert export["group_hash"] == s3.content_hash


def test_irrep_names(s3):
    table = character_table(s3)
    assert [irrep_name(table, i) for i in range(3)] == ["triv", "chi1", "std"]
    with pytest.raises(IndexError):
        irrep_name(table, 3)


def test_standard_irrep():
    a4 = character_table(group_alternating(4))
    assert a4.degrees[standard_irrep(a4)] == 3
    assert [irrep_name(a4, i) for i in range(a4.size)].count("std") == 1
    # S4 has two faithful candidates and D4 none
    assert standard_irrep(character_table(group_symmetric(4))) is None
    assert standard_irrep(character_table(group_dihedral(4))) is None
    assert standard_irrep(character_table(group_cyclic(5))) is None


def expand_left(table, i, j, k):
    total = Counter()
    for m, a in tensor_decompose(table, i, j).items():
        for n, b in tensor_decompose(table, m, k).items():
            total[n] += a * b
    return total


def expand_right(table, i, j, k):
    total = Counter()
    for m, a in tensor_decompose(table, j, k).items():
        for n, b in tensor_decompose(table, i, m).items():
            total[n] += a * b
    return total


def check_tensor_laws(table):
    irreps = range(table.size)
    for i, j in itertools.product(irreps, repeat=2):
        assert tensor_decompose(table, i, j) == tensor_decompose(table, j, i)
    for i, j, k in itertools.product(irreps, repeat=3):
        assert expand_left(table, i, j, k) == expand_right(table, i, j, k)


@pytest.mark.parametrize("entry", corpus_groups(12), ids=lambda entry: entry.name)
def test_tensor_products_commute_and_associate(entry):
    check_tensor_laws(character_table(entry.group))


@pytest.mark.slow
@pytest.mark.parametrize(
    "entry",
    [e for e in corpus_groups(24, include_gl32=False) if e.group.order > 12],
    ids=lambda entry: entry.name,
)
def test_tensor_laws_up_to_order_24(entry):
    check_tensor_laws(character_table(entry.group))


def test_table_cap(s3):
    with pytest.raises(OrderCapExceeded):
        character_table(s3, Limits(table_order=5))


@pytest.mark.slow
def test_gl32_table():
    table = character_table(group_gl32())
    assert table.degrees == (1, 3, 3, 6, 7, 8)
    assert table.class_sizes == (1, 21, 24, 24, 42, 56)
    assert verify_table(table) == []
