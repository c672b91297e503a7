import json

import pytest

from hvnfinite.dynsys import regular_action
from hvnfinite.group_core import group_cyclic
from hvnfinite.utils.config import Limits, load_limits
from hvnfinite.utils.constants import PROJECT_ROOT, SUITE_NAMES
from hvnfinite.utils.context import Context, Workspace
from hvnfinite.utils.parameters import (
    dump_json,
    load_parameters_from_file,
    read_json,
    save_parameters_to_file,
    validate_parameters_directory_exists,
)
from hvnfinite.utils.reports import aggregate_reports, generate_job_report
from hvnfinite.utils.results import CheckResultCollector
from hvnfinite.utils.runner import compare_fingerprints, handle_execution_mode
from hvnfinite.utils.templates import get_status_style, render_string_template
from hvnfinite.utils.types import ResultStatus, RunningMode


def make_context(tmp_path, mode=RunningMode.TESTING):
    return Context(
        suite="demo",
        title="Demo suite",
        task_id="demo",
        mode=mode,
        max_order=4,
        seed=0,
        limits=Limits(),
        result_collector=CheckResultCollector(),
        parameters_file=tmp_path / "demo_parameters.json",
    )


class Outcome:
    def __init__(self):
        self.passed = []
        self.failed = []


def test_default_limits():
    limits = load_limits({})
    assert limits == Limits()
    assert limits.table_order == 20000
    assert limits.enumeration_order == 400
    assert limits.grouplike == 20
    assert limits.isotypic_points == 8


def test_order_cap_override():
    limits = load_limits({"HVN_ORDER_CAP": "50"})
    assert limits.table_order == 50
    assert limits.enumeration_order == 50
    assert limits.grouplike == 20
    assert load_limits({"HVN_ORDER_CAP": " "}) == Limits()


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_invalid_order_cap(raw):
    with pytest.raises(ValueError):
        load_limits({"HVN_ORDER_CAP": raw})


def test_limits_overrides():
    assert Limits().with_overrides(grouplike=64).grouplike == 64


def test_collector_status_ignores_info():
    collector = CheckResultCollector()
    collector.add_result(ResultStatus.INFO, "note")
    assert collector.status == ResultStatus.PASSED
    assert collector.check(True, "fine", "broken")
    assert not collector.check(False, "fine", "broken", {"x": 1})
    assert collector.status == ResultStatus.FAILED
    assert collector.failures == ["broken"]
    assert collector.counterexamples == [{"check": "broken", "data": {"x": 1}}]
    assert collector.count(ResultStatus.PASSED) == 1


def test_json_files(tmp_path):
    target = tmp_path / "nested" / "out.json"
    save_parameters_to_file({"b": 2, "a": [1]}, target)
    assert target.read_text() == dump_json({"a": [1], "b": 2})
    assert load_parameters_from_file(target) == {"a": [1], "b": 2}
    assert read_json(target) == {"a": [1], "b": 2}
    assert load_parameters_from_file(tmp_path / "absent.json") == {}
    with pytest.raises(FileNotFoundError):
        read_json(tmp_path / "absent.json")


def test_corrupt_fingerprint_reads_as_empty(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert load_parameters_from_file(path) == {}


def test_parameters_directory_is_created(tmp_path):
    directory = tmp_path / "parameters"
    validate_parameters_directory_exists(directory, pytest.fail)
    assert directory.is_dir()


def test_compare_fingerprints():
    assert compare_fingerprints({"a": 1}, {"a": 1}) == []
    messages = compare_fingerprints({"a": 1, "b": 2}, {"a": 3, "c": 4})
    assert len(messages) == 3
    assert "'a' is 1, expected 3" in messages[0]


def test_learning_then_testing(tmp_path):
    outcome = Outcome()
    learning = make_context(tmp_path, RunningMode.LEARNING)
    handle_execution_mode(learning, lambda c: {"order": 4}, outcome.passed.append, outcome.failed.append)
    assert json.loads((tmp_path / "demo_parameters.json").read_text()) == {"order": 4}
    assert learning.result_collector.status == ResultStatus.PASSED

    testing = make_context(tmp_path)
    handle_execution_mode(testing, lambda c: {"order": 4}, outcome.passed.append, outcome.failed.append)
    assert testing.result_collector.count(ResultStatus.PASSED) == 1
    assert outcome.passed == ["Suite demo passed", "Suite demo passed"]
    assert outcome.failed == []

    drifted = make_context(tmp_path)
    handle_execution_mode(drifted, lambda c: {"order": 5}, outcome.passed.append, outcome.failed.append)
    assert drifted.result_collector.status == ResultStatus.FAILED
    assert outcome.failed == ["Suite demo failed: 1 failing checks"]


def test_testing_without_golden_file(tmp_path):
    outcome = Outcome()
    context = make_context(tmp_path)
    handle_execution_mode(context, lambda c: {"order": 4}, outcome.passed.append, outcome.failed.append)
    assert context.result_collector.count(ResultStatus.INFO) == 1
    assert outcome.passed == ["Suite demo passed"]


def test_reports(tmp_path):
    results_dir = tmp_path / "report" / "results"
    collector = CheckResultCollector()
    collector.check(True, "tables are orthogonal", "tables fail")
    collector.check(False, "kernels match", "kernels differ", {"group": "S3"})
    page = generate_job_report(
        task_id="demo",
        title="Demo suite",
        description="Checks **{{ parameters.order }}** groups.",
        setup="none",
        procedure="1. run",
        pass_fail_criteria="all pass",
        results=collector.results,
        counterexamples=collector.counterexamples,
        status=collector.status,
        parameters={"order": 4},
        results_dir=results_dir,
    )
    html = page.read_text()
    assert "<strong>4</strong>" in html
    assert "kernels differ" in html
    assert "S3" in html
    metadata = json.loads((results_dir / "demo_metadata.json").read_text())
    assert metadata["passed"] is False
    assert metadata["status"] == "failed"

    summary = aggregate_reports(results_dir=results_dir, report_dir=tmp_path / "report")
    assert summary.name == "verification_summary.html"
    assert "Demo suite" in summary.read_text()


def test_status_styles():
    assert get_status_style(ResultStatus.PASSED)["display_text"] == "PASSED"
    assert get_status_style("errored")["css_class"] == "error-status"
    assert get_status_style("unknown")["css_class"] == "neutral-status"
    assert render_string_template("{{ x }}!", x="ok") == "ok!"


def test_workspace():
    workspace = Workspace()
    c4 = group_cyclic(4)
    workspace.add_group("c4", c4)
    workspace.add_group("c4", group_cyclic(4))
    with pytest.raises(ValueError):
        workspace.add_group("c4", group_cyclic(5))
    workspace.add_system("regular", regular_action(c4), "c4")
    with pytest.raises(ValueError):
        workspace.add_system("regular", regular_action(c4), "c4")
    with pytest.raises(KeyError):
        workspace.system("absent")
    assert workspace.table("c4").degrees == (1, 1, 1, 1)
    assert workspace.hashes() == {"c4": c4.content_hash}


def test_test_plan_lists_every_suite():
    pytest.importorskip("pyats.easypy")
    from hvnfinite.runner import load_test_plan

    plan = load_test_plan(PROJECT_ROOT / "test_plan.yaml")
    suites = [case["suite"] for case in plan["test_cases"].values()]
    assert suites == list(SUITE_NAMES)
    for case in plan["test_cases"].values():
        assert (PROJECT_ROOT / plan["jobfile_directory"] / case["jobfile"]).exists()


def test_test_plan_entries_need_a_suite(tmp_path):
    pytest.importorskip("pyats.easypy")
    from hvnfinite.runner import load_test_plan

    path = tmp_path / "plan.yaml"
    path.write_text(
        "jobfile_directory: jobs/\ntest_cases:\n  1.0.0:\n    title: t\n    jobfile: j.py\n"
    )
    with pytest.raises(KeyError):
        load_test_plan(path)
    with pytest.raises(FileNotFoundError):
        load_test_plan(tmp_path / "absent.yaml")
