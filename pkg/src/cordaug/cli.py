#!/usr/bin/env python3
"""
cordaug CLI - Reflective augmentations of knot cord rings from the command line.

Usage:
    cordaug analyze --name 5_2
    cordaug analyze --gauss "1,-2,3,-1,2,-3" --signs "---" --format json
    cordaug analyze --braid 1 1 1 --strands 2
    cordaug table 8_18 8_19 10_124 --jobs 3 --format csv
    cordaug table --all
    cordaug rep --name 8_19 --index 2 --form su2
    cordaug verify 8_18 8_19 10_124
"""

from __future__ import annotations

import argparse
import logging
import sys

from cordaug import __version__
from cordaug.core.exceptions import (
    CordaugError,
    FormNotApplicableError,
    IndexOutOfRangeError,
    NotEllipticError,
    NoWitnessError,
)
from cordaug.core.models import (
    DimFlag,
    EliminationStrategy,
    KnotReport,
    OutputFormat,
    RepForm,
    RunConfig,
)

logger = logging.getLogger(__name__)

# Largest residual accepted for an emitted representation
REP_TOL = 1e-8

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_UNDETERMINED = 2


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    """Send log records to stderr so stdout carries only reports."""
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run_config(args: argparse.Namespace) -> RunConfig:
    """Build a RunConfig from parsed arguments; absent attributes take defaults."""
    from cordaug.config import solver_config_from_env

    solver = solver_config_from_env(
        seed=getattr(args, "seed", None),
        precision_digits=getattr(args, "precision_digits", None),
        max_starts=getattr(args, "max_starts", None),
        certify_tol=getattr(args, "certify_tol", None),
    )
    return RunConfig(
        name=getattr(args, "name", None),
        gauss=getattr(args, "gauss", None),
        signs=getattr(args, "signs", None),
        braid=getattr(args, "braid", None),
        strands=getattr(args, "strands", None),
        solver=solver,
        output_format=OutputFormat(getattr(args, "format", None) or "text"),
        jobs=getattr(args, "jobs", None) or 1,
        elimination=EliminationStrategy(getattr(args, "elimination", None) or "auto"),
        table=getattr(args, "table", None),
    )


def _exit_code(report: KnotReport) -> int:
    return EXIT_OK if report.dim_flag == DimFlag.ZERO_DIMENSIONAL else EXIT_UNDETERMINED


# =============================================================================
# Analysis Commands
# =============================================================================


def cmd_analyze(args: argparse.Namespace) -> int:
    """Analyze one knot and print its report."""
    from cordaug.core.registry import get_emitter
    from cordaug.pipeline import analyze

    config = run_config(args)
    report = analyze(config).report
    sys.stdout.write(get_emitter(config.output_format.value).emit_report(report))
    return _exit_code(report)


def _table_reports(names: list[str], config: RunConfig) -> list[KnotReport]:
    from concurrent.futures import ProcessPoolExecutor

    from cordaug.pipeline import analyze_named

    count = len(names)
    solvers = [config.solver] * count
    tables = [config.table] * count
    eliminations = [config.elimination] * count
    if config.jobs > 1 and count > 1:
        logger.info("Analyzing %d knots with %d workers", count, config.jobs)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            # map keeps input order
            return list(pool.map(analyze_named, names, solvers, tables, eliminations))
    return [analyze_named(*job) for job in zip(names, solvers, tables, eliminations)]


def cmd_table(args: argparse.Namespace) -> int:
    """Analyze a list of knots and print one row per knot."""
    from cordaug.core.registry import get_emitter
    from cordaug.diagram.table import lookup, table_names

    config = run_config(args)
    names = table_names(config.table) if getattr(args, "all", False) else list(args.names or [])
    # Fail on unknown names before any solve starts
    for name in names:
        lookup(name, config.table)

    reports = _table_reports(names, config)
    sys.stdout.write(get_emitter(config.output_format.value).emit_table(reports))
    if any(report.dim_flag == DimFlag.UNDETERMINED for report in reports):
        return EXIT_UNDETERMINED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Compare computed counts with the published tables."""
    import csv

    from cordaug.pipeline import analyze_named
    from cordaug.reference import expected_counts

    config = run_config(args)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["name", "expected", "observed", "ok"])
    all_ok = True
    for name in args.names or []:
        row = expected_counts(name)
        if row is None:
            logger.warning("No published counts for %s", name)
            writer.writerow([name, "unknown", "", "no"])
            all_ok = False
            continue
        report = analyze_named(name, config.solver, config.table, config.elimination)
        if row.dim_flag == DimFlag.POSITIVE_DIMENSIONAL:
            expected = ">=1 dim"
        else:
            expected = f"{row.elliptic}/{row.non_elliptic}"
        if report.dim_flag == DimFlag.POSITIVE_DIMENSIONAL:
            observed = ">=1 dim"
        elif report.dim_flag == DimFlag.UNDETERMINED:
            observed = "undetermined"
        else:
            counts = report.counts
            observed = f"{counts.rank3_elliptic_real}/{counts.rank3_nonelliptic_real}"
        ok = expected == observed
        all_ok = all_ok and ok
        writer.writerow([name, expected, observed, "yes" if ok else "no"])
    return EXIT_OK if all_ok else EXIT_FAILURE


# =============================================================================
# Representation Commands
# =============================================================================


def cmd_rep(args: argparse.Namespace) -> int:
    """Build the representation of one augmentation and print it as JSON."""
    from cordaug.core.registry import get_emitter
    from cordaug.pipeline import analyze
    from cordaug.repbuild import build_representation, build_sl2r, conjugate_su2

    config = run_config(args)
    form = RepForm(getattr(args, "form", None) or "generic_sl2c")
    analysis = analyze(config)
    knot = analysis.report.name
    augmentations = analysis.augmentations
    index = args.index
    if not 0 <= index < len(augmentations):
        raise IndexOutOfRangeError(
            f"augmentation index {index} out of range (0..{len(augmentations) - 1})",
            index=index,
            available=len(augmentations),
            knot=knot,
        )
    aug = augmentations[index]
    if aug.rank != 3:
        raise FormNotApplicableError(
            f"augmentation {index} has rank {aug.rank}; representations need rank 3",
            form=form.value,
            knot=knot,
        )

    try:
        if form == RepForm.SL2R:
            rep = build_sl2r(aug, analysis.diagram)
        else:
            rep = build_representation(aug, analysis.diagram)
            if form == RepForm.SU2:
                rep = conjugate_su2(rep, aug)
    except (NotEllipticError, NoWitnessError) as e:
        raise FormNotApplicableError(str(e.message), form=form.value, knot=knot) from e

    sys.stdout.write(get_emitter("json").emit_representation(rep) + "\n")
    summary = rep.verification
    residuals = [summary.square, summary.trace, summary.relation, summary.determinant]
    residuals += [value for value in (summary.unitarity, summary.imaginary) if value is not None]
    worst = max(residuals)
    if worst > REP_TOL:
        print(f"Error: representation residual {worst:.3e} exceeds {REP_TOL:g}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


# =============================================================================
# Main Entry Point
# =============================================================================


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--name", help="Knot name looked up in the table (e.g., 5_2)")
    parser.add_argument("--gauss", help="Gauss code, comma-separated signed crossings")
    parser.add_argument("--signs", help="Crossing signs, one '+' or '-' per crossing")
    parser.add_argument("--braid", type=int, nargs="+", help="Braid word as signed generators")
    parser.add_argument("--strands", type=int, help="Braid strand count")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="Start generator seed (default: 1)")
    parser.add_argument(
        "--precision-digits", type=int, help="Refinement precision in digits (default: 50)"
    )
    parser.add_argument("--max-starts", type=int, help="Multi-start budget (default: 6000)")
    parser.add_argument("--certify-tol", type=float, help="Residual bound (default: 1e-10)")
    parser.add_argument(
        "--elimination",
        default="auto",
        choices=[strategy.value for strategy in EliminationStrategy],
        help="Elimination seed strategy",
    )
    parser.add_argument("--table", help="Knot table CSV (default: $CORDAUG_TABLE or bundled)")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    parser.add_argument("--debug", action="store_true", help="Log debug detail to stderr")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="cordaug",
        description="Reflective augmentations of the abelian cord ring",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  cordaug analyze --name 5_2
  cordaug analyze --braid 1 1 1 --format json

  cordaug table 8_18 8_19 --format csv --jobs 2
  cordaug verify 8_18 8_19

  cordaug rep --name 8_19 --index 2 --form su2
        """,
    )
    parser.add_argument("--version", action="version", version=f"cordaug {__version__}")

    subparsers = parser.add_subparsers(dest="command", required=True)
    formats = [fmt.value for fmt in OutputFormat]

    # analyze
    analyze_parser = subparsers.add_parser("analyze", help="Analyze one knot")
    _add_input_options(analyze_parser)
    _add_run_options(analyze_parser)
    analyze_parser.add_argument("--format", default="text", choices=formats, help="Output format")

    # table
    table_parser = subparsers.add_parser("table", help="Analyze several table knots")
    table_parser.add_argument("names", nargs="*", help="Knot names")
    table_parser.add_argument("--all", action="store_true", help="Every knot in the table")
    table_parser.add_argument("--jobs", type=int, default=1, help="Parallel worker processes")
    _add_run_options(table_parser)
    table_parser.add_argument("--format", default="csv", choices=formats, help="Output format")

    # rep
    rep_parser = subparsers.add_parser("rep", help="Representation of one augmentation")
    _add_input_options(rep_parser)
    _add_run_options(rep_parser)
    rep_parser.add_argument("--index", type=int, default=0, help="Augmentation index")
    rep_parser.add_argument(
        "--form",
        default="generic_sl2c",
        choices=[form.value for form in RepForm],
        help="Normal form",
    )

    # verify
    verify_parser = subparsers.add_parser("verify", help="Compare with published counts")
    verify_parser.add_argument("names", nargs="+", help="Knot names")
    _add_run_options(verify_parser)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.debug)

    commands = {
        "analyze": cmd_analyze,
        "table": cmd_table,
        "rep": cmd_rep,
        "verify": cmd_verify,
    }
    try:
        return commands[args.command](args)
    except CordaugError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
