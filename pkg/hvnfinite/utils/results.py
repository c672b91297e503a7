"""Utilities for collecting check results and counterexamples during a suite run."""

import logging

from hvnfinite.utils.types import Counterexample, Result, ResultStatus

logger = logging.getLogger(__name__)


class CheckResultCollector:
    """Collects the results of a verification suite.

    Results accumulate without stopping the suite, so every failing check of a
    run is reported, and each failure can carry a counterexample dump.
    """

    def __init__(self) -> None:
        self.results: list[Result] = []
        self.counterexamples: list[Counterexample] = []

    @property
    def status(self) -> ResultStatus:
        """Overall status of the collected results.

        INFO results are ignored. If all results are INFO or PASSED, the
        status is PASSED; otherwise the first other status wins.
        """
        for result in self.results:
            if result["status"] not in (ResultStatus.PASSED, ResultStatus.INFO):
                return result["status"]
        return ResultStatus.PASSED

    @property
    def failures(self) -> list[str]:
        return [
            r["message"]
            for r in self.results
            if r["status"] not in (ResultStatus.PASSED, ResultStatus.INFO)
        ]

    def count(self, status: ResultStatus) -> int:
        return sum(1 for r in self.results if r["status"] == status)

    def add_result(self, status: ResultStatus, message: str) -> None:
        """Add a result to the collection.

        Args:
            status: Result status, e.g. ResultStatus.PASSED
            message: Detailed result message
        """
        logger.info("[RESULT][%s] %s", status, message)
        self.results.append({"status": status, "message": message})

    def add_counterexample(self, check: str, data: dict) -> None:
        """Record the data that made a check fail."""
        logger.debug("Recording counterexample for %s", check)
        self.counterexamples.append({"check": check, "data": data})

    def check(self, condition: bool, passed: str, failed: str, data: dict | None = None) -> bool:
        """Record PASSED or FAILED depending on ``condition``; return it."""
        if condition:
            self.add_result(ResultStatus.PASSED, passed)
        else:
            self.add_result(ResultStatus.FAILED, failed)
            if data is not None:
                self.add_counterexample(failed, data)
        return condition
