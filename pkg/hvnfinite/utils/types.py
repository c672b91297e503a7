"""Contains type definitions shared by the verification suites, reports and the CLI."""

from enum import Enum
from typing import Any, TypedDict


class RunningMode(str, Enum):
    """The mode under which verification suites are running."""

    LEARNING = "learning"
    TESTING = "testing"

    def __str__(self) -> str:
        return self.value


class ResultStatus(str, Enum):
    """Status values for check results."""

    PASSED = "passed"
    FAILED = "failed"
    ERRORED = "errored"
    SKIPPED = "skipped"
    INFO = "info"

    def __str__(self) -> str:
        return self.value


class Result(TypedDict):
    """Represents a check result."""

    status: ResultStatus
    message: str


class Counterexample(TypedDict):
    """Data dumped next to a failed check so it can be reproduced."""

    check: str
    data: dict


class SuiteMetadata(TypedDict):
    """What a suite report leaves behind for the summary page."""

    task_id: str
    title: str
    passed: bool
    status: str
    timestamp: str
    result_file: str


Fingerprint = dict[str, Any]
