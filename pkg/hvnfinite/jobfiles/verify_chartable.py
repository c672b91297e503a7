"""Verify exact orthogonality of the character tables of the corpus groups."""

import logging

from pyats import aetest

from hvnfinite.suites import SUITES, run_suite
from hvnfinite.utils.constants import PARAMETERS_DIR
from hvnfinite.utils.context import Context
from hvnfinite.utils.parameters import validate_parameters_directory_exists
from hvnfinite.utils.reports import generate_job_report
from hvnfinite.utils.runner import handle_execution_mode
from hvnfinite.utils.types import RunningMode

logger = logging.getLogger(__name__)

SUITE = SUITES["chartable"]

DESCRIPTION = SUITE.description
SETUP = SUITE.setup
PROCEDURE = SUITE.procedure
PASS_FAIL_CRITERIA = SUITE.pass_fail_criteria


class CommonSetup(aetest.CommonSetup):
    """Setup for script."""

    @aetest.subsection
    def ensure_parameters_directory_exists(self):
        """Create parameters directory if it doesn't exist."""
        validate_parameters_directory_exists(PARAMETERS_DIR, self.failed)


class VerifyCharacterTables(aetest.Testcase):
    """
    Verify Character Tables
    """

    @aetest.setup
    def setup(self, context: Context):
        """
        Set test mode: learning or testing
        """
        self.mode = context.mode
        logger.info("Running suite %s in %s mode", SUITE.name, self.mode)

    @aetest.test
    def verify_character_tables(self, context: Context):
        """
        Learning mode: run the checks and save the suite fingerprint
        Testing mode: run the checks and compare against the saved fingerprint
        """
        handle_execution_mode(
            context,
            lambda c: run_suite(SUITE, c),
            self.passed,
            self.failed,
        )


class CommonCleanup(aetest.CommonCleanup):
    """Cleanup for script."""

    @aetest.subsection
    def add_results_to_report(self, context: Context):
        """Add accumulated results to the HTML report."""
        if context.mode == RunningMode.TESTING:
            generate_job_report(
                task_id=SUITE.name,
                title=SUITE.title,
                description=DESCRIPTION,
                setup=SETUP,
                procedure=PROCEDURE,
                pass_fail_criteria=PASS_FAIL_CRITERIA,
                results=context.result_collector.results,
                counterexamples=context.result_collector.counterexamples,
                status=context.result_collector.status,
                parameters=context.parameters,
            )
