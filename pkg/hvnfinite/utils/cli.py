"""Contains the argparse definitions for the pyATS job runner and the ``hvn`` command."""

import argparse

from hvnfinite import __version__
from hvnfinite.utils.constants import (
    ALL_SUITES,
    DEFAULT_MAX_ORDER,
    DEFAULT_SEED,
    PARAMETERS_DIR,
    SUITE_NAMES,
    TEST_PLAN_FILE,
)
from hvnfinite.utils.types import RunningMode


def _add_verification_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        type=RunningMode,
        choices=list(RunningMode),
        default=RunningMode.TESTING,
        help=(
            "Mode to run: learning (save suite fingerprints) or testing "
            "(compare against saved fingerprints)"
        ),
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help="Largest group order of the built-in corpus",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="Seed for the randomized relabelings of the corpus",
    )


def define_parser() -> argparse.ArgumentParser:
    """Creates the argparse parser for the pyATS job runner."""

    parser = argparse.ArgumentParser(description="Finite Halmos-von Neumann verification")
    _add_verification_arguments(parser)
    parser.add_argument(
        "--test-plan",
        type=str,
        default=str(TEST_PLAN_FILE),
        help="Path to the test plan YAML file",
    )
    parser.add_argument(
        "--suite",
        choices=[*SUITE_NAMES, ALL_SUITES],
        default=ALL_SUITES,
        help="Run only the test-plan entries of this suite",
    )
    return parser


def _add_group_selector(parser: argparse.ArgumentParser, required: bool = True) -> None:
    selector = parser.add_mutually_exclusive_group(required=required)
    selector.add_argument("--group", metavar="PATH", help="Cayley (.cayley) or permutation (.perm) file")
    selector.add_argument("--cyclic", type=int, metavar="N", help="Cyclic group of order N")
    selector.add_argument("--symmetric", type=int, metavar="N", help="Symmetric group on N points")
    selector.add_argument("--dihedral", type=int, metavar="N", help="Dihedral group of order 2N")
    selector.add_argument(
        "--builtin",
        metavar="ID",
        help="Inline group id, e.g. quaternion:8 or gl32",
    )


def define_cli_parser() -> argparse.ArgumentParser:
    """Creates the argparse parser for the ``hvn`` command line interface."""

    parser = argparse.ArgumentParser(
        prog="hvn",
        description="Finite group duality and Halmos-von Neumann classification",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to standard error (-vv for debug output)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    chartable = subparsers.add_parser("chartable", help="Compute a character table")
    _add_group_selector(chartable)
    chartable.add_argument("--output", metavar="PATH", help="Write the JSON export to PATH")

    classify = subparsers.add_parser("classify", help="Spectrum and normality of a system")
    classify.add_argument("--system", metavar="PATH", help="Action (.action) or measure (.measure) file")
    _add_group_selector(classify, required=False)
    classify.add_argument(
        "--regular",
        action="store_true",
        help="Classify the regular action of the selected group",
    )
    classify.add_argument("--output", metavar="PATH", help="Write the spectrum export to PATH")

    iso = subparsers.add_parser("iso", help="Decide isomorphism of two systems")
    iso.add_argument(
        "--system",
        metavar="PATH",
        action="append",
        required=True,
        help="Action file; give exactly two",
    )
    iso.add_argument(
        "--oracle",
        action="store_true",
        help="Also run the brute-force search and require agreement",
    )
    iso.add_argument("--certificate", metavar="PATH", help="Write the bijection to PATH")

    verify = subparsers.add_parser("verify", help="Run verification suites over the corpus")
    verify.add_argument(
        "--suite",
        choices=[*SUITE_NAMES, ALL_SUITES],
        default=ALL_SUITES,
        help="Suite to run",
    )
    _add_verification_arguments(verify)
    verify.add_argument(
        "--parameters-dir",
        metavar="PATH",
        default=str(PARAMETERS_DIR),
        help="Directory of golden fingerprints",
    )
    verify.add_argument("--report-dir", metavar="PATH", help="Write HTML reports to PATH")

    gassmann = subparsers.add_parser("gassmann", help="Search for a Gassmann pair")
    _add_group_selector(gassmann)

    return parser
