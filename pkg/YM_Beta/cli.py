"""ym-beta command line.

Exit status: 0 report produced, 1 golden-suite failure, 2 input or pipeline error.
Logging goes to stderr; stdout carries only the report.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError

import YM_Beta.state as state
from YM_Beta import __version__
from YM_Beta.constants import FRAMINGS
from YM_Beta.errors import BetaError
from YM_Beta.models import CouplingRequest, RepRequest, RunConfig

logger = logging.getLogger("YM_Beta")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ym-beta",
        description="One-loop beta function of first-order Yang-Mills from heat-kernel counterterms.",
    )
    parser.add_argument("--algebra", default="su3",
                        help="Built-in algebra (su2..su5, su2-eps) or path to an algebra file.")
    parser.add_argument("--rep", action="append", default=[], metavar="NAME:MULT",
                        help="Built-in matter representation with multiplicity (repeatable).")
    parser.add_argument("--rep-file", action="append", default=[], metavar="PATH",
                        help="Matter representation file (repeatable).")
    parser.add_argument("--framing", choices=FRAMINGS, default=None,
                        help="Trivialization of the cohomology class (default from YM_BETA_FRAMING).")
    parser.add_argument("--format", dest="output_format", choices=("table", "doc"), default="table")
    parser.add_argument("--run-coupling", metavar="g0,LMIN,LMAX,N", default=None,
                        help="Tabulate g(lambda) on N log-spaced scales.")
    parser.add_argument("--workers", type=int, default=None, help="Threads for diagram evaluation.")
    parser.add_argument("--verify", action="store_true", help="Run the golden suite instead of a report.")
    parser.add_argument("--log-level", default=None, help="Logging level (default from YM_BETA_LOG_LEVEL).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    reps = [RepRequest.parse(text) for text in args.rep]
    reps += [RepRequest(name=os.path.basename(path), path=path) for path in args.rep_file]
    is_file = os.path.isfile(args.algebra)
    return RunConfig(
        algebra=args.algebra,
        algebra_file=args.algebra if is_file else None,
        reps=reps,
        framing=args.framing or state.DEFAULT_FRAMING,
        output_format=args.output_format,
        coupling=CouplingRequest.parse(args.run_coupling) if args.run_coupling else None,
        workers=args.workers if args.workers is not None else state.WORKERS,
    )


def _configure_logging(level: Optional[str]) -> None:
    name = (level or state.LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ValueError(f"unknown log level {level or state.LOG_LEVEL!r}")
    logging.basicConfig(
        level=name,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.log_level)
    except ValueError as exc:
        sys.stderr.write(f"error [cli]: {exc}\n")
        return EXIT_ERROR

    if args.verify:
        from YM_Beta.verify import render_suite, run_golden_suite

        results = run_golden_suite()
        sys.stdout.write(render_suite(results))
        return EXIT_OK if all(check.passed for _, check in results) else EXIT_VERIFY_FAILED

    from YM_Beta.report import build_report, render_doc, render_table

    try:
        config = config_from_args(args)
        report = build_report(config)
    except ValidationError as exc:
        sys.stderr.write(f"error [cli]: {exc}\n")
        return EXIT_ERROR
    except BetaError as exc:
        sys.stderr.write(f"error [{exc.module}]: {exc}\n")
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error [cli]: {exc}\n")
        return EXIT_ERROR

    render = render_doc if config.output_format == "doc" else render_table
    sys.stdout.write(render(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
