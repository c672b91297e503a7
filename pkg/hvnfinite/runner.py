"""Primary entrypoint for pyATS job execution.

    pyats run job hvnfinite/runner.py --suite all --max-order 24
"""

import logging
from pathlib import Path

import yaml
from pyats.easypy import run

from hvnfinite.utils.cli import define_parser
from hvnfinite.utils.config import load_limits
from hvnfinite.utils.constants import ALL_SUITES, PARAMETERS_DIR
from hvnfinite.utils.context import Context
from hvnfinite.utils.reports import aggregate_reports, ensure_results_dirs
from hvnfinite.utils.results import CheckResultCollector

logger = logging.getLogger(__name__)
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)


def load_test_plan(test_plan_path: Path) -> dict:
    """Load the test plan and validate every test case."""
    if not test_plan_path.exists():
        logger.error("Test plan file does not exist: %s", test_plan_path)
        raise FileNotFoundError(f"Test plan file does not exist: {test_plan_path}")
    with open(test_plan_path, "r") as f:
        test_plan = yaml.safe_load(f)
    for test_case_identifier, test_case_data in test_plan["test_cases"].items():
        missing = {"title", "jobfile", "suite"} - set(test_case_data)
        if missing:
            raise KeyError(
                f"Test case {test_case_identifier} is missing {', '.join(sorted(missing))}"
            )
    return test_plan


def main(runtime):
    """
    Main entry point for job file

    Args:
        runtime: runtime object provided by pyATS
    """
    ensure_results_dirs()

    args, unknown = define_parser().parse_known_args()
    logger.info("Running in %s mode up to order %d", args.mode, args.max_order)

    test_plan_path = Path(args.test_plan).resolve()
    logger.info("Test plan filepath provided is '%s'", test_plan_path)
    test_plan = load_test_plan(test_plan_path)

    base_jobfile_directory = Path(test_plan["jobfile_directory"]).resolve()
    limits = load_limits()

    for test_case_identifier, test_case_data in test_plan["test_cases"].items():
        suite = test_case_data["suite"]
        if args.suite != ALL_SUITES and suite != args.suite:
            continue

        task_id = f"{test_case_identifier} - {test_case_data['title']}"
        jobfile_path = base_jobfile_directory / test_case_data["jobfile"]
        parameters_file = test_case_data.get("parameters_file") or f"{suite}_parameters.json"

        logger.info("Executing test case '%s' tied to jobfile at '%s'", task_id, jobfile_path)

        context = Context(
            suite=suite,
            title=test_case_data["title"],
            task_id=task_id,
            mode=args.mode,
            max_order=args.max_order,
            seed=args.seed,
            limits=limits,
            result_collector=CheckResultCollector(),
            parameters_file=PARAMETERS_DIR / parameters_file,
        )

        run(
            testscript=str(jobfile_path),
            runtime=runtime,
            context=context,
            task_id=task_id,
        )

    logger.info("Aggregating suite results into final report")
    final_report = aggregate_reports()
    logger.info("Final report generated at: %s", final_report)
