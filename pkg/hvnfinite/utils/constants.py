"""Contains constants used across the library, the CLI and the verification suites."""

from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent.parent

# Golden fingerprints learned by the verification suites live under the
# `parameters` directory at the root of the project.
PARAMETERS_DIR = PROJECT_ROOT / "parameters"

# Customer-facing results directories used by the pyATS runner
TEST_RESULTS_DIR = PROJECT_ROOT / "test_results"
REPORT_DIR = PROJECT_ROOT / "test_report"
REPORT_RESULTS_DIRNAME = "results"
AGGREGATED_REPORT_FILENAME = "verification_summary.html"

TEST_PLAN_FILE = PROJECT_ROOT / "test_plan.yaml"

# Default caps; see utils.config for the environment override
TABLE_ORDER_CAP = 20000
ENUMERATION_ORDER_CAP = 400
GROUPLIKE_CAP = 20
BRUTE_FORCE_POINTS_CAP = 16
MEASURE_ATOMS_CAP = 16
ISOTYPIC_POINTS_CAP = 8
ORDER_CAP_ENV_VAR = "HVN_ORDER_CAP"

# Default corpus bound of `verify`
DEFAULT_MAX_ORDER = 24

# CLI exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

JSON_INDENT = 2

# Verification suites in test-plan order
SUITE_NAMES = (
    "chartable",
    "duality",
    "abelian",
    "envrot",
    "hvn",
    "realize",
    "meastop",
    "multbound",
    "gassmann",
)
ALL_SUITES = "all"
DEFAULT_SEED = 0

# Corpus bounds used inside the suites
ABELIAN_MAX_ORDER = 32
SUITE_GROUPLIKE_CAP = 64
ENVROT_MAX_POINTS = 24
ORACLE_MAX_POINTS = 16
MEASURE_PAIR_MAX_POINTS = 12
