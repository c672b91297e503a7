import numpy as np
import pytest

from hvnfinite.errors import GroupError
from hvnfinite.tannaka import (
    intertwiner_basis,
    matrix_models,
    model_group_ids,
    tannaka_families,
    verify_tannaka,
)
from hvnfinite.duality import GrouplikeSubset


def test_model_ids():
    ids = model_group_ids()
    assert "cyclic:1" in ids and "cyclic:8" in ids
    assert {"symmetric:3", "dihedral:4", "quaternion:8"} <= set(ids)


def test_unknown_model():
    with pytest.raises(GroupError):
        matrix_models("alternating:4")


def test_s3_model_covers_every_irrep():
    model = matrix_models("symmetric:3")
    assert sorted(model.matrices) == [0, 1, 2]
    standard = model.matrices[2]
    assert standard[0].shape == (2, 2)
    for g in model.group.elements:
        assert np.isclose(np.trace(standard[g]), model.table.value(2, g).to_complex())


def test_schur_lemma_on_intertwiners():
    model = matrix_models("symmetric:3")
    assert len(intertwiner_basis(model.matrices[2], model.matrices[2])) == 1
    assert intertwiner_basis(model.matrices[1], model.matrices[2]) == []
    assert len(intertwiner_basis(model.matrices[0], model.matrices[0])) == 1


@pytest.mark.parametrize("group_id", ["symmetric:3", "dihedral:4", "quaternion:8", "cyclic:4", "cyclic:1"])
def test_families_are_exactly_the_group_image(group_id):
    model = matrix_models(group_id)
    reports = verify_tannaka(model)
    assert reports
    for report in reports:
        assert report.passed, report


def test_full_dual_of_s3_recovers_the_group():
    model = matrix_models("symmetric:3")
    families = tannaka_families(model, GrouplikeSubset(model.table, (0, 1, 2)))
    assert len(families) == 6
    sign_only = tannaka_families(model, GrouplikeSubset(model.table, (0, 1)))
    assert len(sign_only) == 2


def test_cyclic_model_counts():
    reports = verify_tannaka(matrix_models("cyclic:4"))
    assert sorted(r.families for r in reports) == [1, 2, 4]
