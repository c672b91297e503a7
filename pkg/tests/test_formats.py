from fractions import Fraction

import pytest

from hvnfinite.char_theory import character_table
from hvnfinite.corpus import group_symmetric
from hvnfinite.duality import enumerate_grouplike
from hvnfinite.dynsys import brute_force_iso, is_normal, normal_iso_decision, point_spectrum
from hvnfinite.errors import GroupError, GroupMismatch, NotEquivariant, ParseError
from hvnfinite.formats import (
    check_certificate,
    export_certificate,
    export_grouplike,
    export_spectrum,
    format_cayley,
    inline_group,
    load_group,
    load_grouplike,
    load_system,
    parse_action,
    parse_cayley,
    parse_measure,
)
from hvnfinite.group_core import group_is_isomorphic


def test_s3_cayley_sample(samples_dir):
    loaded = load_group("s3.cayley", samples_dir)
    assert loaded.name == "s3"
    assert loaded.generators is None
    assert loaded.group.order == 6
    assert group_is_isomorphic(loaded.group, group_symmetric(3)) is not None


def test_non_associative_sample_names_file_and_line(samples_dir):
    with pytest.raises(ParseError) as excinfo:
        load_group(str(samples_dir / "bad_associativity.cayley"))
    error = excinfo.value
    assert error.line == 4
    assert str(error).startswith(f"{samples_dir / 'bad_associativity.cayley'}:4:")
    assert "(1, 1, 2)" in str(error)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\n0 1 2\n1 2 0\n", 3),
        ("2\n0 1\n1 x\n", 3),
        ("2\n0 1\n1 2\n", 3),
        ("# comment\n\n2\n0 1 1\n1 0\n", 4),
        ("", 1),
    ],
    ids=["missing-row", "bad-token", "out-of-range", "long-row", "empty"],
)
def test_malformed_cayley_tables(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_cayley(text, "inline.cayley")
    assert excinfo.value.line == line
    assert excinfo.value.source == "inline.cayley"


def test_column_without_inverse_points_at_the_repeating_row():
    with pytest.raises(ParseError) as excinfo:
        parse_cayley("3\n0 1 2\n1 2 0\n2 1 0\n", "columns.cayley")
    assert excinfo.value.line == 4
    assert "Element 1" in str(excinfo.value)


def test_format_cayley_reads_back(s3):
    assert parse_cayley(format_cayley(s3)) == s3


def test_permutation_group_sample(samples_dir):
    loaded = load_group("gl32.perm", samples_dir)
    assert loaded.group.order == 168
    assert len(loaded.generators) == 2


def test_missing_group_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_group("absent.cayley", tmp_path)


def test_unknown_group_suffix(tmp_path):
    path = tmp_path / "group.txt"
    path.write_text("1\n0\n")
    with pytest.raises(ParseError):
        load_group(str(path))


def test_inline_groups():
    assert inline_group("cyclic:1").generators == ()
    assert inline_group("cyclic:5").generators == (1,)
    assert inline_group("dihedral:2").generators == (2, 1)
    assert inline_group("symmetric:3").group.order == 6
    with pytest.raises(GroupError):
        inline_group("torus:2")


def test_action_samples(samples_dir):
    natural = load_system(samples_dir / "s3_natural.action")
    assert natural.system.points == 3
    assert natural.group.name == "s3"
    assert natural.measure is None
    assert point_spectrum(natural.system).multiplicities == (1, 0, 1)

    regular = load_system(samples_dir / "c4_regular.action").system
    relabeled = load_system(samples_dir / "c4_relabeled.action").system
    assert is_normal(regular) and is_normal(relabeled)
    assert normal_iso_decision(regular, relabeled) is not None


def test_measure_sample(samples_dir):
    loaded = load_system(samples_dir / "s3_natural.measure")
    assert loaded.measure is not None
    assert loaded.measure.weights == (Fraction(1, 3),) * 3


def test_action_needs_a_header():
    with pytest.raises(ParseError) as excinfo:
        parse_action("1 0\n", "bad.action")
    assert excinfo.value.line == 1


def test_action_needs_one_line_per_generator():
    with pytest.raises(ParseError) as excinfo:
        parse_action("group cyclic:4 points 4\n1 2 3 0\n0 1 2 3\n", "extra.action")
    assert excinfo.value.line == 3


def test_action_images_must_be_bijections():
    with pytest.raises(ParseError) as excinfo:
        parse_action("group cyclic:2 points 2\n0 0\n", "bad.action")
    assert excinfo.value.line == 2


def test_measure_needs_exactly_one_weights_line():
    text = "group cyclic:2 points 2\n1 0\nweights 1/2 1/2\nweights 1/2 1/2\n"
    with pytest.raises(ParseError) as excinfo:
        parse_measure(text, "twice.measure")
    assert excinfo.value.line == 4


def test_measure_weights_must_be_invariant():
    text = "group cyclic:2 points 2\n1 0\nweights 1/4 3/4\n"
    with pytest.raises(ParseError) as excinfo:
        parse_measure(text, "skewed.measure")
    assert excinfo.value.line == 3


def test_certificate_checks(samples_dir):
    regular = load_system(samples_dir / "c4_regular.action").system
    relabeled = load_system(samples_dir / "c4_relabeled.action").system
    q = normal_iso_decision(regular, relabeled)
    table = character_table(regular.group)
    certificate = export_certificate(regular, relabeled, q, table)
    assert check_certificate(certificate, regular, relabeled) == q

    tampered = dict(certificate, bijection=[0, 1, 2, 3])
    with pytest.raises(NotEquivariant):
        check_certificate(tampered, regular, relabeled)
    foreign = dict(certificate, group_hash="0" * 64)
    with pytest.raises(GroupMismatch):
        check_certificate(foreign, regular, relabeled)


def test_grouplike_export_reads_back(s3):
    table = character_table(s3)
    sigma = enumerate_grouplike(table)[1]
    assert load_grouplike(export_grouplike(sigma), table).members == sigma.members
    with pytest.raises(GroupMismatch):
        load_grouplike({"members": [0, 1], "table_hash": "other"}, table)
    with pytest.raises(GroupError):
        load_grouplike({"members": [0, 2], "table_hash": table.content_hash}, table)


def test_spectrum_export(samples_dir):
    natural = load_system(samples_dir / "s3_natural.action").system
    export = export_spectrum(point_spectrum(natural))
    assert export["spectrum"] == [[0, 1, 1], [2, 1, 2]]


@pytest.mark.slow
def test_gl32_sample_actions_are_not_isomorphic(samples_dir):
    points = load_system(samples_dir / "gl32_natural.action").system
    lines = load_system(samples_dir / "gl32_dual.action").system
    assert point_spectrum(points).multiplicities == point_spectrum(lines).multiplicities
    assert brute_force_iso(points, lines) is None
