"""Contains the ``hvn`` command line interface.

Results go to standard output, either as plain text tables or as canonical
JSON with ``--json``. Logs go to standard error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from hvnfinite.char_theory import CharacterTable, character_table, irrep_name
from hvnfinite.dynsys import (
    brute_force_iso,
    gassmann_search,
    is_minimal,
    is_normal,
    normal_iso_decision,
    point_spectrum,
    regular_action,
)
from hvnfinite.errors import GroupMismatch, HvnError, InvariantViolation
from hvnfinite.formats import (
    LoadedGroup,
    LoadedSystem,
    export_certificate,
    export_character_table,
    export_spectrum,
    inline_group,
    load_group,
    load_system,
)
from hvnfinite.suites import resolve_suites, run_suite
from hvnfinite.utils.cli import define_cli_parser
from hvnfinite.utils.config import Limits, load_limits
from hvnfinite.utils.constants import (
    EXIT_INTERNAL,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    REPORT_RESULTS_DIRNAME,
)
from hvnfinite.utils.context import Context, Workspace
from hvnfinite.utils.parameters import dump_json, write_json
from hvnfinite.utils.reports import aggregate_reports, generate_job_report
from hvnfinite.utils.results import CheckResultCollector
from hvnfinite.utils.runner import handle_execution_mode
from hvnfinite.utils.types import ResultStatus

logger = logging.getLogger(__name__)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _emit_json(data: Any) -> None:
    sys.stdout.write(dump_json(data))


def _selected_group(args: argparse.Namespace, limits: Limits) -> LoadedGroup | None:
    if args.group is not None:
        return load_group(args.group, None, limits)
    for kind in ("cyclic", "symmetric", "dihedral"):
        value = getattr(args, kind)
        if value is not None:
            return inline_group(f"{kind}:{value}", limits)
    if args.builtin is not None:
        return inline_group(args.builtin, limits)
    return None


def _format_grid(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[k]) for row in [header, *rows]) for k in range(len(header))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *rows]]


def _irrep_list(table: CharacterTable, members: tuple[int, ...]) -> str:
    return ", ".join(irrep_name(table, i) for i in members)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_chartable(args: argparse.Namespace, limits: Limits) -> int:
    """Print the character table of the selected group."""
    workspace = Workspace()
    loaded = _selected_group(args, limits)
    workspace.add_group(loaded.name, loaded.group)
    table = workspace.table(loaded.name, limits)
    export = export_character_table(table)
    if args.output:
        write_json(export, args.output)
    if args.json:
        _emit_json(export)
        return EXIT_OK

    group = loaded.group
    print(f"group: {loaded.name} (order {group.order})")
    print(f"degrees: {', '.join(map(str, table.degrees))}")
    print(f"class sizes: {', '.join(map(str, table.class_sizes))}")
    header = ["", *(group.label(c.representative) for c in table.classes)]
    rows = [[irrep_name(table, i), *(str(v) for v in row)] for i, row in enumerate(table.rows)]
    for line in _format_grid(header, rows):
        print(line)
    return EXIT_OK


def _classified_system(args: argparse.Namespace, limits: Limits) -> LoadedSystem:
    loaded = _selected_group(args, limits)
    if args.system is not None:
        if loaded is not None or args.regular:
            raise ValueError("classify takes either --system or a group selector with --regular")
        return load_system(args.system, limits)
    if loaded is None or not args.regular:
        raise ValueError("classify needs --system PATH, or a group selector with --regular")
    return LoadedSystem(f"regular {loaded.name}", regular_action(loaded.group), loaded)


def cmd_classify(args: argparse.Namespace, limits: Limits) -> int:
    """Report minimality, point spectrum and normality of one system."""
    loaded = _classified_system(args, limits)
    system = loaded.system
    minimal = is_minimal(system)
    report = is_normal(system, limits)
    spectrum = report.spectrum
    table = spectrum.table
    model_order = sum(table.degrees[i] ** 2 for i in spectrum.support) if report else None

    if args.output:
        write_json(export_spectrum(spectrum), args.output)
    if args.json:
        _emit_json(
            {
                "system": loaded.name,
                "points": system.points,
                "minimal": minimal,
                "normal": minimal and report.normal,
                "violations": list(report.violations),
                "spectrum": export_spectrum(spectrum),
                "canonical_model_order": model_order if minimal else None,
            }
        )
        return EXIT_OK

    print(f"system: {loaded.name} ({system.points} points, group order {system.group.order})")
    header = ["irrep", "degree", "multiplicity"]
    rows = [
        [irrep_name(table, i), str(table.degrees[i]), str(m)]
        for i, m in enumerate(spectrum.multiplicities)
    ]
    for line in _format_grid(header, rows):
        print(line)
    if not minimal:
        print("not minimal")
    elif not report:
        print(f"minimal; NOT normal ({'; '.join(report.violations)})")
    elif model_order == system.group.order:
        print(f"normal; canonical model: regular {loaded.group.name}")
    else:
        print(
            f"normal; canonical model: rotation on Tan({{{_irrep_list(table, spectrum.support)}}}) "
            f"of order {model_order}"
        )
    return EXIT_OK


def cmd_iso(args: argparse.Namespace, limits: Limits) -> int:
    """Decide isomorphism of two systems, spectrally or by exhaustive search."""
    if len(args.system) != 2:
        raise ValueError(f"iso needs exactly two --system files, got {len(args.system)}")
    first, second = (load_system(path, limits) for path in args.system)
    a, b = first.system, second.system
    if a.group != b.group:
        raise GroupMismatch(
            f"{first.name} acts by {first.group.name} and {second.name} by {second.group.name}"
        )
    spectra_equal = (
        point_spectrum(a, limits).multiplicities == point_spectrum(b, limits).multiplicities
    )

    both_normal = is_minimal(a) and is_minimal(b) and is_normal(a, limits) and is_normal(b, limits)
    if both_normal or not args.oracle:
        bijection = normal_iso_decision(a, b, limits)
        method = "spectral"
        if args.oracle:
            oracle = brute_force_iso(a, b, limits)
            if (oracle is None) != (bijection is None):
                raise InvariantViolation(
                    f"Spectral decision and brute force disagree on {first.name} and {second.name}"
                )
            method = "spectral, confirmed by brute force"
    else:
        bijection = brute_force_iso(a, b, limits)
        method = "brute force"

    if bijection is not None and args.certificate:
        write_json(export_certificate(a, b, bijection, character_table(a.group, limits)), args.certificate)

    if args.json:
        _emit_json(
            {
                "isomorphic": bijection is not None,
                "spectra_equal": spectra_equal,
                "bijection": list(bijection) if bijection is not None else None,
                "method": method,
            }
        )
    else:
        print("ISOMORPHIC" if bijection is not None else "NOT ISOMORPHIC")
        print(f"spectra: {'EQUAL' if spectra_equal else 'DIFFERENT'}")
        print(f"method: {method}")
        if bijection is not None:
            print("bijection: " + ", ".join(f"{x}->{y}" for x, y in enumerate(bijection)))
        elif spectra_equal:
            print(
                "warning: equal point spectra without an isomorphism (a Gassmann pair); "
                "the spectrum classifies normal systems only"
            )
    return EXIT_OK if bijection is not None else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace, limits: Limits) -> int:
    """Run verification suites over the built-in corpus."""
    parameters_dir = Path(args.parameters_dir)
    report_dir = Path(args.report_dir) if args.report_dir else None
    results_dir = report_dir / REPORT_RESULTS_DIRNAME if report_dir else None

    summary = []
    for suite in resolve_suites(args.suite):
        collector = CheckResultCollector()
        context = Context(
            suite=suite.name,
            title=suite.title,
            task_id=suite.name,
            mode=args.mode,
            max_order=args.max_order,
            seed=args.seed,
            limits=limits,
            result_collector=collector,
            parameters_file=parameters_dir / f"{suite.name}_parameters.json",
        )
        handle_execution_mode(
            context,
            lambda c, suite=suite: run_suite(suite, c),
            logger.info,
            logger.warning,
        )
        if results_dir is not None:
            generate_job_report(
                task_id=suite.name,
                title=suite.title,
                description=suite.description,
                setup=suite.setup,
                procedure=suite.procedure,
                pass_fail_criteria=suite.pass_fail_criteria,
                results=collector.results,
                counterexamples=collector.counterexamples,
                status=collector.status,
                parameters=context.parameters,
                results_dir=results_dir,
            )
        summary.append((suite, collector))

    if report_dir is not None:
        aggregate_reports(results_dir=results_dir, report_dir=report_dir)

    passed = all(collector.status == ResultStatus.PASSED for _, collector in summary)
    if args.json:
        _emit_json(
            {
                "passed": passed,
                "suites": [
                    {
                        "name": suite.name,
                        "status": str(collector.status),
                        "passed": collector.count(ResultStatus.PASSED),
                        "failed": collector.count(ResultStatus.FAILED),
                        "errored": collector.count(ResultStatus.ERRORED),
                        "failures": collector.failures,
                    }
                    for suite, collector in summary
                ],
            }
        )
    else:
        rows = [
            [
                suite.name,
                str(collector.status),
                str(collector.count(ResultStatus.PASSED)),
                str(collector.count(ResultStatus.FAILED) + collector.count(ResultStatus.ERRORED)),
            ]
            for suite, collector in summary
        ]
        for line in _format_grid(["suite", "status", "passed", "failed"], rows):
            print(line)
        for suite, collector in summary:
            for failure in collector.failures:
                print(f"{suite.name}: {failure}")
    return EXIT_OK if passed else EXIT_NEGATIVE


def cmd_gassmann(args: argparse.Namespace, limits: Limits) -> int:
    """Search the selected group for a Gassmann pair."""
    loaded = _selected_group(args, limits)
    pair = gassmann_search(loaded.group, limits)
    if args.json:
        if pair is None:
            _emit_json({"group": loaded.name, "pair": None})
        else:
            _emit_json(
                {
                    "group": loaded.name,
                    "pair": {
                        "first_subgroup": list(pair.first_subgroup.members),
                        "second_subgroup": list(pair.second_subgroup.members),
                        "points": pair.first.points,
                        "spectrum": export_spectrum(point_spectrum(pair.first, limits)),
                    },
                }
            )
        return EXIT_OK

    if pair is None:
        print("none")
        return EXIT_OK
    spectrum = point_spectrum(pair.first, limits)
    print(f"Gassmann pair in {loaded.name}: two actions on {pair.first.points} points")
    print(f"first stabilizer: {list(pair.first_subgroup.members)}")
    print(f"second stabilizer: {list(pair.second_subgroup.members)}")
    print(
        "shared spectrum: "
        + ", ".join(
            f"{irrep_name(spectrum.table, i)}^{spectrum.multiplicity(i)}" for i in spectrum.support
        )
    )
    print("witness: the stabilizers are not conjugate, and no equivariant bijection exists")
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, Limits], int]] = {
    "chartable": cmd_chartable,
    "classify": cmd_classify,
    "iso": cmd_iso,
    "verify": cmd_verify,
    "gassmann": cmd_gassmann,
}


def main(argv: list[str] | None = None) -> int:
    """Entry point of the ``hvn`` command; returns the exit code."""
    args = define_cli_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        limits = load_limits()
        return COMMANDS[args.command](args, limits)
    except InvariantViolation as e:
        logger.exception("Internal invariant violated")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HvnError, ValueError, FileNotFoundError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE
