#!/usr/bin/env python3
"""
Command-Line Tool

Three subcommands over the classification engine:
1. classify  - report on a single W(n,k;l) (text or JSON)
2. enumerate - classify a whole parameter grid and export it (TSV, JSON-lines, Parquet)
3. verify    - run the property suites with a deterministic seed

Usage:
    python src/charclass/run_cli.py classify --n 5 --k 2 --l 1,2
    python src/charclass/run_cli.py classify --n 2 --k 1 --l 1 --format json
    python src/charclass/run_cli.py classify --n 4 --k 2 --l=-1,2 --explain
    python src/charclass/run_cli.py enumerate --n-max 3 --l-max 1 --out grid.tsv
    python src/charclass/run_cli.py verify --seed 7 --degree-cap 4

Negative weights must be attached with '=' (--l=-1,2) so they are not read as options.

Exit codes: 0 success, 1 verification failure, 2 domain rejection, 64 usage, 70 internal error, 74 I/O.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from charclass.classifier import classify, classify_grid
from charclass.format_converter import FILE_EXTENSIONS, FormatConverter
from charclass.formatters import format_report_text
from charclass.property_validator import PropertyValidator, generate_summary_report
from charclass.report_builder import ReportDocument, error_document
from charclass.settings import EXIT_CODES, SETTINGS, get_output_path, resolve_seed
from charclass.stiefel_manifold import (
    InvalidParametersError,
    NotAManifoldError,
    iter_canonical_params,
    validate,
)

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised for malformed command-line input; maps to the usage exit code."""


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of argparse's default 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["usage"], f"{self.prog}: error: {message}\n")


def parse_weights(text: str) -> List[int]:
    """
    Parse a comma-separated weight list.

    Examples:
        >>> parse_weights("1,2")
        [1, 2]
        >>> parse_weights("-1, 2")
        [-1, 2]
    """
    try:
        weights = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weights must be comma-separated integers, got {text!r}"
        ) from None
    return weights


def configure_logging(verbose: bool = False, log_file: Optional[str] = None):
    """
    Configure logging for the CLI; reports go to stdout, logs to stderr.

    Args:
        verbose: Log at DEBUG instead of INFO
        log_file: Also log to this file

    Raises:
        OSError: If the log file cannot be opened
    """
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def build_parser() -> CliArgumentParser:
    """
    Build the argument parser with its three subcommands.
    """
    parser = CliArgumentParser(
        prog="charclass",
        description=SETTINGS["app_subtitle"],
    )
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level')
    parser.add_argument('--log-file', type=str, help='Also write the log to this file')

    subparsers = parser.add_subparsers(dest='command', required=True)

    # classify
    p_classify = subparsers.add_parser('classify', help='Classify a single W(n,k;l)')
    p_classify.add_argument('--n', type=int, required=True, help='Ambient complex dimension')
    p_classify.add_argument('--k', type=int, required=True, help='Frame size (1 <= k <= n)')
    p_classify.add_argument(
        '--l',
        type=parse_weights,
        required=True,
        help='Comma-separated weights (use --l=-1,2 for negative weights)'
    )
    p_classify.add_argument(
        '--format',
        choices=['text', 'json'],
        default=SETTINGS["default_format"],
        help='Report format'
    )
    p_classify.add_argument('--explain', action='store_true', help='Include the derivation trace')
    p_classify.add_argument(
        '--cap',
        type=int,
        default=SETTINGS["default_cap"],
        help='Truncation cap in powers of c (>= 2; 4 also reports the formal p2)'
    )

    # enumerate
    p_enumerate = subparsers.add_parser('enumerate', help='Classify a parameter grid')
    p_enumerate.add_argument('--n-max', type=int, required=True, help='Largest n (>= 2)')
    p_enumerate.add_argument('--l-max', type=int, required=True, help='Largest weight (>= 1)')
    p_enumerate.add_argument(
        '--out',
        type=str,
        help='Output file (default: data/enumerations/grid_n<N>_l<L>.<ext>)'
    )
    p_enumerate.add_argument(
        '--format',
        choices=SETTINGS["enumerate_formats"],
        default='tsv',
        help='Output format'
    )
    p_enumerate.add_argument(
        '--workers',
        type=int,
        default=SETTINGS["default_workers"],
        help='Worker processes for evaluation (output order is unaffected)'
    )

    # verify
    p_verify = subparsers.add_parser('verify', help='Run the property suites')
    p_verify.add_argument(
        '--samples',
        type=int,
        help='Samples per randomized check (default: config/verify_defaults.json)'
    )
    p_verify.add_argument(
        '--seed',
        type=int,
        help=f"Random seed (default {SETTINGS['default_seed']}; {SETTINGS['seed_env_var']} overrides)"
    )
    p_verify.add_argument(
        '--degree-cap',
        type=int,
        default=SETTINGS["default_cap"],
        help='Cap for the oracle cross-checks (>= 2)'
    )

    return parser


def cmd_classify(args: argparse.Namespace) -> int:
    """Classify one parameter set and print the report."""
    if args.cap < 2:
        raise UsageError(f"--cap must be >= 2, got {args.cap}")

    try:
        params = validate(args.n, args.k, args.l)
    except InvalidParametersError as e:
        kind = "not_a_manifold" if isinstance(e, NotAManifoldError) else "invalid_parameters"
        logger.error(f"Rejected W({args.n},{args.k};{','.join(map(str, args.l))}): {e}")
        if args.format == 'json':
            print(error_document(str(e), kind))
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES["domain_rejection"]

    classification = classify(params, cap=args.cap, explain=args.explain)
    doc = ReportDocument.from_classification(classification, include_derivation=args.explain)

    if args.format == 'json':
        print(doc.to_json())
    else:
        print(format_report_text(doc, explain=args.explain))
    return EXIT_CODES["success"]


def cmd_enumerate(args: argparse.Namespace) -> int:
    """Classify every canonical grid point and export the table."""
    if args.n_max < 2:
        raise UsageError(f"--n-max must be >= 2, got {args.n_max}")
    if args.l_max < 1:
        raise UsageError(f"--l-max must be >= 1, got {args.l_max}")
    if args.workers < 1:
        raise UsageError(f"--workers must be >= 1, got {args.workers}")

    if args.out:
        output_path = Path(args.out)
    else:
        output_path = get_output_path(
            f"grid_n{args.n_max}_l{args.l_max}.{FILE_EXTENSIONS[args.format]}"
        )

    params = list(iter_canonical_params(args.n_max, args.l_max))
    logger.info(f"Enumerating {len(params)} grid points (n <= {args.n_max}, l <= {args.l_max})")
    classifications = classify_grid(params, workers=args.workers)

    try:
        path = FormatConverter().export(classifications, output_path, fmt=args.format)
    except OSError as e:
        logger.error(f"Cannot write {output_path}: {e}")
        return EXIT_CODES["io_error"]

    logger.info(f"✅ {args.format.upper()}: {path}")
    return EXIT_CODES["success"]


def cmd_verify(args: argparse.Namespace) -> int:
    """Run all property suites and print the summary."""
    if args.samples is not None and args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    if args.degree_cap < 2:
        raise UsageError(f"--degree-cap must be >= 2, got {args.degree_cap}")
    try:
        seed = resolve_seed(args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None

    logger.info(f"Running property suites (seed {seed}, cap {args.degree_cap})")
    validator = PropertyValidator(seed=seed, samples=args.samples, cap=args.degree_cap)
    results = validator.run_all()

    print(generate_summary_report(results, seed))

    if all(result.passed for result in results):
        return EXIT_CODES["success"]
    for result in results:
        for failure in result.failures:
            logger.error(f"{result.suite}: {failure}")
    return EXIT_CODES["verification_failure"]


COMMANDS = {
    'classify': cmd_classify,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Args:
        argv: Arguments without the program name (None = sys.argv[1:])

    Returns:
        Exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        configure_logging(args.verbose, args.log_file)
    except OSError as e:
        print(f"error: cannot open log file {args.log_file}: {e}", file=sys.stderr)
        return EXIT_CODES["io_error"]

    logger.debug(f"Command: {args.command}")

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        logger.error(str(e))
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except Exception as e:
        logger.error(f"Command {args.command} failed: {e}", exc_info=True)
        return EXIT_CODES["internal_error"]


if __name__ == "__main__":
    sys.exit(main())
