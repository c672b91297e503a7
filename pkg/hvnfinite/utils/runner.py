"""Contains utility functions used for flow control in verification suites."""

import logging
from typing import Callable

from hvnfinite.utils.context import Context
from hvnfinite.utils.parameters import (
    load_parameters_from_file,
    save_parameters_to_file,
)
from hvnfinite.utils.types import Fingerprint, ResultStatus, RunningMode

logger = logging.getLogger(__name__)


def compare_fingerprints(current: Fingerprint, expected: Fingerprint) -> list[str]:
    """Return one message per key whose value differs from the golden fingerprint."""
    mismatches = []
    for key in sorted(set(current) | set(expected)):
        if key not in current:
            mismatches.append(f"Fingerprint entry {key!r} is missing from the current run")
        elif key not in expected:
            mismatches.append(f"Fingerprint entry {key!r} is not in the golden file")
        elif current[key] != expected[key]:
            mismatches.append(
                f"Fingerprint entry {key!r} is {current[key]!r}, expected {expected[key]!r}"
            )
    return mismatches


def handle_execution_mode(
    context: Context,
    current_state_callable: Callable[[Context], Fingerprint],
    passing_callable: Callable[[str], None],
    failing_callable: Callable[[str], None],
) -> None:
    """Run a suite and handle its fingerprint according to the running mode.

    The checks always run. In learning mode the fingerprint is saved; in
    testing mode it is compared with the golden file when one exists.
    """
    collector = context.result_collector
    current_state = current_state_callable(context)

    if context.mode == RunningMode.LEARNING:
        context.parameters = current_state
        save_parameters_to_file(current_state, context.parameters_file)
        collector.add_result(
            ResultStatus.INFO,
            f"Learned the fingerprint and saved it to {context.parameters_file}",
        )
    else:
        expected = load_parameters_from_file(context.parameters_file)
        context.parameters = expected
        if not expected:
            collector.add_result(
                ResultStatus.INFO,
                "No golden fingerprint found; the checks ran without a comparison",
            )
        else:
            logger.info("Comparing the suite fingerprint to the golden file")
            mismatches = compare_fingerprints(current_state, expected)
            for message in mismatches:
                collector.add_result(ResultStatus.FAILED, message)
            if not mismatches:
                collector.add_result(
                    ResultStatus.PASSED,
                    "The suite fingerprint matches the golden file",
                )

    if collector.status == ResultStatus.PASSED:
        passing_callable(f"Suite {context.suite} passed")
    else:
        failing_callable(f"Suite {context.suite} failed: {len(collector.failures)} failing checks")
