#!/usr/bin/env python3
"""
Main entry point for the Boolean-function quasi-randomness analyzer
Runs property analysis, tower construction, extant-notion comparison and the self-test
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from dotenv import load_dotenv

from core.errors import BudgetExceededError, InputFormatError, PreconditionError, VerificationError
from orchestration import COMMANDS, OUTPUT_FORMATS, AnalysisOrchestrator, RunConfig, parse_range, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Boolean-function quasi-randomness analyzer",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # All eight properties of the 4-bit inner product at rank 2
  python main.py analyze --bent ip:2 --d 2

  # Analyze a truth-table file and write the JSON mirror
  python main.py analyze --table f.tt --d 3 --format data --out f.json

  # Bent function composed with the extended Hamming code, table written alongside
  python main.py construct --bent ip:2 --code-builtin extended:3 --table-out tower.tt

  # Gowers norms, regularity profiles and the relation battery, with a decay table
  python main.py compare --table f.tt --d 2 --zp-range 6:14

  # Invariant battery on four workers
  python main.py selftest --seed 7 --n-jobs 4

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget refusal.
Defaults for --seed, --mc-samples, --budget, --n-jobs and --format come from
QR_* variables in the environment or a .env file (see .env.example).
        """,
    )
    parser.add_argument('command', choices=COMMANDS, help='What to run')
    parser.add_argument('--d', type=int, default=None, help='Rank (default: min(2, n))')
    parser.add_argument('--seed', type=int, default=None, help='Monte Carlo seed, unsigned 64-bit (default: QR_SEED or 0)')
    parser.add_argument('--mc-samples', type=int, default=None, help='Monte Carlo samples per pattern')
    parser.add_argument('--budget', type=int, default=None, help='Elementary-operation cap per scan')
    parser.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS, default=None,
                        help='Report format: text (key-value, exact num/den) or data (JSON)')
    parser.add_argument('--out', type=str, default=None, help='Report path (default: stdout)')
    parser.add_argument('--n-jobs', type=int, default=None, help='joblib workers (-1 = all cores)')
    parser.add_argument('--verbose', '-v', action='count', default=0, help='-v for INFO, -vv for DEBUG')
    parser.add_argument('--table', type=str, default=None, help='Truth-table file to analyze')
    parser.add_argument('--packed', action='store_true', help='Truth tables are in the packed binary format')
    parser.add_argument('--bent', type=str, default=None, help="Built-in bent function, 'ip:<m>'")
    parser.add_argument('--bent-table', type=str, default=None, help='Truth-table file for g in construct')
    parser.add_argument('--code', type=str, default=None, help='Parity-check matrix file')
    parser.add_argument('--code-builtin', type=str, default=None,
                        help='hamming:<r> | extended:<r> | example | identity:<n>')
    parser.add_argument('--pattern', type=str, default=None, help='Extra DTH/RAIN pattern file for analyze')
    parser.add_argument('--zp-range', type=str, default=None, help='Decay table dimensions a:b for compare')
    parser.add_argument('--table-out', type=str, default=None, help='Where construct writes the composed table')
    return parser


def configure_logging(level_name: str, verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s', force=True)


def banner(title: str, stream: TextIO) -> None:
    print(f"\n{'='*60}", file=stream)
    print(title, file=stream)
    print(f"{'='*60}", file=stream)


def print_configuration(config: RunConfig, stream: TextIO) -> None:
    banner(f"QUASI-RANDOMNESS ANALYZER: {config.command.upper()}", stream)
    print(f"Seed: {config.seed}", file=stream)
    print(f"Rank: {config.d if config.d is not None else 'min(2, n)'}", file=stream)
    print(f"MC samples: {config.mc_samples}", file=stream)
    print(f"Budget: {config.budget}", file=stream)
    print(f"Workers: {config.n_jobs}", file=stream)


def print_summary(config: RunConfig, ok: bool, stream: TextIO) -> None:
    banner("RESULTS SUMMARY", stream)
    print(f"Report: {config.out or 'stdout'} ({config.output_format})", file=stream)
    print(f"Verdict: {'PASS' if ok else 'FAIL'}", file=stream)
    print(f"{'='*60}\n", file=stream)


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        config = RunConfig.from_env(args.command).override(
            d=args.d,
            seed=args.seed,
            mc_samples=args.mc_samples,
            budget=args.budget,
            output_format=args.output_format,
            out=args.out,
            n_jobs=args.n_jobs,
            table=args.table,
            packed=args.packed or None,
            bent=args.bent,
            bent_table=args.bent_table,
            code=args.code,
            code_builtin=args.code_builtin,
            pattern=args.pattern,
            zp_range=parse_range(args.zp_range) if args.zp_range else None,
            table_out=args.table_out,
        )
    except PreconditionError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT

    configure_logging(config.log_level, args.verbose)
    # stdout carries the report itself unless --out moves it to a file
    stream = sys.stdout if config.out else sys.stderr
    print_configuration(config, stream)

    try:
        banner(f"RUNNING {config.command.upper()}", stream)
        result = AnalysisOrchestrator(config).run()
        document = write_report(result.report, config.output_format, config.out)
    except VerificationError as e:
        print(f"VERIFICATION FAILED: {e}", file=sys.stderr)
        if e.witness:
            print(f"  witness: {e.witness}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (InputFormatError, PreconditionError) as e:
        print(f"INPUT ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as e:
        print(f"BUDGET REFUSED: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        return EXIT_VERIFICATION

    if config.out is None:
        sys.stdout.write(document)
    print_summary(config, result.ok, stream)
    return EXIT_OK if result.ok else EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
