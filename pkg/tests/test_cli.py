import json

import pytest

from hvnfinite.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chartable_of_the_s3_sample(capsys, samples_dir):
    code, out, _ = run(capsys, "chartable", "--group", str(samples_dir / "s3.cayley"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group: s3 (order 6)"
    assert lines[1] == "degrees: 1, 1, 2"
    assert lines[2] == "class sizes: 1, 2, 3"
    assert lines[4].split()[0] == "triv"
    assert lines[6].split() == ["std", "2", "-1", "0"]


def test_chartable_json_and_output_file(capsys, tmp_path):
    target = tmp_path / "c4.json"
    code, out, _ = run(capsys, "--json", "chartable", "--cyclic", "4", "--output", str(target))
    assert code == 0
    export = json.loads(out)
    assert export["degrees"] == [1, 1, 1, 1]
    assert json.loads(target.read_text()) == export


def test_chartable_reports_parse_errors(capsys, samples_dir):
    code, _, err = run(capsys, "chartable", "--group", str(samples_dir / "bad_associativity.cayley"))
    assert code == 2
    assert err.startswith("error: ")
    assert ":4:" in err


def test_classify_non_normal_sample(capsys, samples_dir):
    code, out, _ = run(capsys, "classify", "--system", str(samples_dir / "s3_natural.action"))
    assert code == 0
    assert out.splitlines()[-1] == "minimal; NOT normal (mult(std)=1<2; support not grouplike)"


def test_classify_regular_action(capsys):
    code, out, _ = run(capsys, "classify", "--cyclic", "4", "--regular")
    assert code == 0
    assert out.splitlines()[-1] == "normal; canonical model: regular cyclic:4"


def test_classify_json(capsys, samples_dir):
    code, out, _ = run(capsys, "--json", "classify", "--system", str(samples_dir / "c2_trivial.action"))
    assert code == 0
    report = json.loads(out)
    assert report["points"] == 2
    assert report["minimal"] is False
    assert report["normal"] is False
    assert report["canonical_model_order"] is None
    assert report["violations"][0] == "mult(triv)=2>1"


def test_classify_needs_a_system(capsys):
    code, _, err = run(capsys, "classify", "--cyclic", "4")
    assert code == 2
    assert "--regular" in err


def test_iso_of_relabeled_regular_actions(capsys, samples_dir, tmp_path):
    certificate = tmp_path / "cert.json"
    code, out, _ = run(
        capsys,
        "iso",
        "--system",
        str(samples_dir / "c4_regular.action"),
        "--system",
        str(samples_dir / "c4_relabeled.action"),
        "--oracle",
        "--certificate",
        str(certificate),
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["ISOMORPHIC", "spectra: EQUAL", "method: spectral, confirmed by brute force"]
    assert lines[3].startswith("bijection: 0->")
    written = json.loads(certificate.read_text())
    assert written["points"] == 4
    assert sorted(written["bijection"]) == [0, 1, 2, 3]


def test_iso_across_groups(capsys, samples_dir):
    code, _, err = run(
        capsys,
        "iso",
        "--system",
        str(samples_dir / "c4_regular.action"),
        "--system",
        str(samples_dir / "c2_trivial.action"),
    )
    assert code == 2
    assert err.startswith("error: ")


def test_iso_of_non_normal_systems_needs_the_oracle(capsys, samples_dir):
    natural = str(samples_dir / "s3_natural.action")
    code, _, _ = run(capsys, "iso", "--system", natural, "--system", natural)
    assert code == 2
    code, out, _ = run(capsys, "iso", "--system", natural, "--system", natural, "--oracle")
    assert code == 0
    assert "method: brute force" in out


@pytest.mark.slow
def test_iso_of_the_gl32_gassmann_pair(capsys, samples_dir):
    code, out, _ = run(
        capsys,
        "iso",
        "--system",
        str(samples_dir / "gl32_natural.action"),
        "--system",
        str(samples_dir / "gl32_dual.action"),
        "--oracle",
    )
    assert code == 1
    lines = out.splitlines()
    assert lines[:2] == ["NOT ISOMORPHIC", "spectra: EQUAL"]
    assert lines[-1].startswith("warning: equal point spectra without an isomorphism")


def test_gassmann_in_s3(capsys):
    code, out, _ = run(capsys, "gassmann", "--symmetric", "3")
    assert code == 0
    assert out == "none\n"


def test_verify_learning_then_testing(capsys, tmp_path):
    parameters_dir = tmp_path / "parameters"
    common = ["--suite", "chartable", "--max-order", "4", "--parameters-dir", str(parameters_dir)]
    code, out, _ = run(capsys, "verify", "--mode", "learning", *common)
    assert code == 0
    assert (parameters_dir / "chartable_parameters.json").exists()
    assert out.splitlines()[0].split() == ["suite", "status", "passed", "failed"]

    code, out, _ = run(capsys, "--json", "verify", *common)
    assert code == 0
    summary = json.loads(out)
    assert summary["passed"] is True
    assert summary["suites"][0]["name"] == "chartable"
    assert summary["suites"][0]["failed"] == 0


def test_verify_detects_a_drifted_fingerprint(capsys, tmp_path):
    parameters_dir = tmp_path / "parameters"
    parameters_dir.mkdir()
    (parameters_dir / "abelian_parameters.json").write_text('{"C1": 99}\n')
    code, out, _ = run(
        capsys,
        "--json",
        "verify",
        "--suite",
        "abelian",
        "--max-order",
        "3",
        "--parameters-dir",
        str(parameters_dir),
    )
    assert code == 1
    summary = json.loads(out)
    assert summary["suites"][0]["status"] == "failed"
    assert len(summary["suites"][0]["failures"]) == 3


def test_verify_writes_reports(capsys, tmp_path):
    report_dir = tmp_path / "report"
    code, _, _ = run(
        capsys,
        "verify",
        "--max-order",
        "3",
        "--parameters-dir",
        str(tmp_path / "parameters"),
        "--report-dir",
        str(report_dir),
    )
    assert code == 0
    assert (report_dir / "verification_summary.html").exists()
    assert (report_dir / "results" / "hvn_results.html").exists()


def test_version():
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
