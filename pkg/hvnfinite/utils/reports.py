"""Contains utility functions used for generating the HTML verification reports."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any

import markdown

from hvnfinite.utils import templates
from hvnfinite.utils.constants import (
    AGGREGATED_REPORT_FILENAME,
    REPORT_DIR,
    REPORT_RESULTS_DIRNAME,
    TEST_RESULTS_DIR,
)
from hvnfinite.utils.parameters import dump_json
from hvnfinite.utils.types import Counterexample, Result, ResultStatus, SuiteMetadata


def ensure_results_dirs(
    results_dir: Path = TEST_RESULTS_DIR, report_dir: Path = REPORT_DIR
) -> None:
    """Create the necessary directories for storing results if they don't exist."""
    for directory in [results_dir, report_dir, report_dir / REPORT_RESULTS_DIRNAME]:
        directory.mkdir(parents=True, exist_ok=True)


def convert_markdown_to_html(markdown_text: str) -> str:
    """Convert markdown text to HTML."""
    return markdown.markdown(
        markdown_text,
        extensions=["extra", "codehilite", "tables", "fenced_code", "toc", "nl2br"],
    )


def _render_section(text: str, parameters: dict[str, Any]) -> str:
    rendered = templates.render_string_template(text, parameters=parameters)
    return convert_markdown_to_html(rendered)


def generate_job_report(
    task_id: str,
    title: str,
    description: str,
    setup: str,
    procedure: str,
    pass_fail_criteria: str,
    results: list[Result],
    counterexamples: list[Counterexample],
    status: ResultStatus,
    parameters: dict[str, Any],
    results_dir: Path = TEST_RESULTS_DIR,
) -> Path:
    """Generate an HTML report for one suite execution.

    Args:
        task_id: Unique identifier for the suite execution, used in file names
        title: Suite title
        description: Suite description (from DESCRIPTION template)
        setup: Setup information (from SETUP template)
        procedure: Suite procedure (from PROCEDURE template)
        pass_fail_criteria: Pass/fail criteria (from PASS_FAIL_CRITERIA template)
        results: Detailed results of the suite execution
        counterexamples: Data dumped next to failed checks
        status: Status of the suite execution
        parameters: Fingerprint used when rendering the markdown sections
        results_dir: Directory receiving the page and its metadata

    Returns:
        Path to the generated HTML report file
    """
    results_dir.mkdir(parents=True, exist_ok=True)
    parameters = parameters or {}

    html_content = templates.render_template(
        "suite/report.html.j2",
        title=title,
        description_html=_render_section(description, parameters),
        setup_html=_render_section(setup, parameters),
        procedure_html=_render_section(procedure, parameters),
        criteria_html=_render_section(pass_fail_criteria, parameters),
        results=[{"message": r["message"], "status": r["status"]} for r in results],
        counterexamples=[
            {"check": c["check"], "dump": dump_json(c["data"])} for c in counterexamples
        ],
        status=status,
        passed=status == ResultStatus.PASSED,
        generation_time=datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
    )

    output_file = results_dir / f"{task_id}_results.html"
    output_file.write_text(html_content)

    # Save metadata for aggregation
    metadata: SuiteMetadata = {
        "task_id": task_id,
        "title": title,
        "passed": status == ResultStatus.PASSED,
        "status": str(status),
        "timestamp": datetime.now().isoformat(),
        "result_file": str(output_file),
    }
    metadata_file = results_dir / f"{task_id}_metadata.json"
    metadata_file.write_text(json.dumps(metadata, indent=2))

    return output_file


def _metadata_status(metadata: dict) -> ResultStatus:
    """Suite status from stored metadata, falling back to the pass/fail flag."""
    try:
        status = ResultStatus(metadata.get("status"))
    except ValueError:
        status = None
    if status is None or status == ResultStatus.INFO:
        return ResultStatus.PASSED if metadata.get("passed", False) else ResultStatus.FAILED
    return status


def aggregate_reports(
    results_dir: Path = TEST_RESULTS_DIR, report_dir: Path = REPORT_DIR
) -> Path:
    """Aggregate all individual suite pages into a single summary page."""
    ensure_results_dirs(results_dir, report_dir)
    all_results = [
        json.loads(metadata_file.read_text())
        for metadata_file in results_dir.glob("*_metadata.json")
    ]
    all_results.sort(key=lambda x: (x["timestamp"], x["task_id"]))

    passed_suites = 0
    failed_suites = 0
    formatted_results = []
    for result in all_results:
        # Copy the suite page next to the summary so the links are relative
        result_file = Path(result["result_file"])
        result_file_dest = report_dir / REPORT_RESULTS_DIRNAME / result_file.name
        if result_file.resolve() != result_file_dest.resolve():
            result_file_dest.write_text(result_file.read_text())

        status = _metadata_status(result)
        if status == ResultStatus.PASSED:
            passed_suites += 1
        elif status == ResultStatus.FAILED:
            failed_suites += 1

        formatted_results.append(
            {
                "task_id": result["task_id"],
                "title": result["title"],
                "status": status,
                "timestamp": result["timestamp"],
                "result_file_path": str(result_file_dest.relative_to(report_dir)),
            }
        )

    # Success rate only counts suites that either passed or failed
    total_pass_fail = passed_suites + failed_suites
    success_rate = (passed_suites / total_pass_fail * 100) if total_pass_fail > 0 else 0

    html_content = templates.render_template(
        "summary/report.html.j2",
        generation_time=datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        total_suites=len(all_results),
        passed_suites=passed_suites,
        failed_suites=failed_suites,
        success_rate=success_rate,
        results=formatted_results,
    )

    output_file = report_dir / AGGREGATED_REPORT_FILENAME
    output_file.write_text(html_content)

    return output_file
