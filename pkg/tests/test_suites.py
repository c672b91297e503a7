import pytest

from hvnfinite.suites import SUITES, abelian_bound, resolve_suites, run_suite
from hvnfinite.utils.config import Limits
from hvnfinite.utils.constants import SUITE_NAMES
from hvnfinite.utils.context import Context
from hvnfinite.utils.results import CheckResultCollector
from hvnfinite.utils.types import ResultStatus, RunningMode


def suite_context(tmp_path, name, max_order, limits=None):
    return Context(
        suite=name,
        title=SUITES[name].title,
        task_id=name,
        mode=RunningMode.TESTING,
        max_order=max_order,
        seed=0,
        limits=limits or Limits(),
        result_collector=CheckResultCollector(),
        parameters_file=tmp_path / f"{name}_parameters.json",
    )


def test_registry_follows_the_test_plan_order():
    assert [suite.name for suite in resolve_suites("all")] == list(SUITE_NAMES)
    assert resolve_suites("hvn") == [SUITES["hvn"]]
    with pytest.raises(KeyError):
        resolve_suites("unknown")


def test_abelian_bound():
    assert abelian_bound(24) == 32
    assert abelian_bound(60) == 32
    assert abelian_bound(8) == 8


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suites_pass_on_a_small_corpus(tmp_path, name):
    context = suite_context(tmp_path, name, 6)
    fingerprint = run_suite(SUITES[name], context)
    assert context.result_collector.status == ResultStatus.PASSED, (
        context.result_collector.failures
    )
    assert context.result_collector.count(ResultStatus.PASSED) > 0
    assert fingerprint


def test_fingerprints_are_deterministic(tmp_path):
    first = run_suite(SUITES["chartable"], suite_context(tmp_path, "chartable", 6))
    second = run_suite(SUITES["chartable"], suite_context(tmp_path, "chartable", 6))
    assert first == second
    assert first["S3"]["degrees"] == [1, 1, 2]
    assert first["S3"]["class_sizes"] == [1, 2, 3]


def test_errors_are_recorded_per_group(tmp_path):
    context = suite_context(tmp_path, "chartable", 4, Limits(table_order=2))
    fingerprint = run_suite(SUITES["chartable"], context)
    assert context.result_collector.status == ResultStatus.ERRORED
    assert set(fingerprint) == {"C1", "C2"}
    assert any("OrderCapExceeded" in message for message in context.result_collector.failures)
    assert context.result_collector.counterexamples[0]["check"] == "C3"


def test_gassmann_skips_gl32_below_the_default_bound(tmp_path):
    context = suite_context(tmp_path, "gassmann", 6)
    fingerprint = run_suite(SUITES["gassmann"], context)
    assert "GL(3,2)" not in fingerprint
    assert fingerprint["S3"] == 0


@pytest.mark.slow
def test_gassmann_finds_the_gl32_pair(tmp_path):
    context = suite_context(tmp_path, "gassmann", 24)
    fingerprint = run_suite(SUITES["gassmann"], context)
    assert context.result_collector.status == ResultStatus.PASSED
    assert fingerprint["GL(3,2)"]["pairs"] > 0
    assert fingerprint["GL(3,2)"]["points"][0] == 7
