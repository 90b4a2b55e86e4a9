"""``topzeta run`` and ``topzeta verify``.

Exit codes: 0 success, 1 usage or input errors, 2 the reduction stage gave up, 3 an Euler
characteristic could not be computed, 4 a property check failed.
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from simple_parsing import ArgumentParser, DashVariant, choice

from topzeta.cli.checks import VerifyConfig, run_checks
from topzeta.cli.documents import OutputDocument, load_input
from topzeta.engine import RunConfig, run_algebra
from topzeta.errors import InputDocumentError

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_REDUCE",
    "EXIT_EULER",
    "EXIT_VERIFY",
    "OutputConfig",
    "run",
    "verify",
    "main",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REDUCE = 2
EXIT_EULER = 3
EXIT_VERIFY = 4

_FAILURE_CODES = {"reduce": EXIT_REDUCE, "euler": EXIT_EULER}


@dataclass
class OutputConfig:
    output: Optional[str] = None
    """Write the output document here instead of stdout."""
    timings: bool = True
    """Include wall times in the output document."""
    log_level: str = choice("DEBUG", "INFO", "WARNING", "ERROR", default="WARNING")


def _parser(prog: str) -> ArgumentParser:
    return ArgumentParser(prog=prog, add_option_string_dash_variants=DashVariant.DASH)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def run(argv: Sequence[str]) -> int:
    parser = _parser("topzeta run")
    parser.add_argument(
        "input", help="input document (JSON) or the name of a built-in algebra"
    )
    parser.add_arguments(RunConfig, dest="config")
    parser.add_arguments(OutputConfig, dest="out")
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    out: OutputConfig = args.out
    config: RunConfig = args.config
    _configure_logging(out.log_level)

    try:
        algebra = load_input(args.input, config.run_mode)
    except (InputDocumentError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(
        "counting %s of %s (rank %d)", algebra.mode.counts(), algebra.name, algebra.rank
    )
    outcome = run_algebra(algebra, config)
    document = OutputDocument.from_outcome(algebra, outcome, timings=out.timings)
    _write(document.dumps(), out.output)

    if not outcome.ok:
        print(f"{outcome.failure.phase} failure: {outcome.failure.reason}", file=sys.stderr)
        return _FAILURE_CODES[outcome.failure.phase]
    return EXIT_OK


def verify(argv: Sequence[str]) -> int:
    parser = _parser("topzeta verify")
    parser.add_arguments(VerifyConfig, dest="config")
    parser.add_argument("--log-level", default="WARNING")
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    _configure_logging(args.log_level)

    failed = False
    for result in run_checks(args.config):
        status = "ok" if result.ok else "FAIL"
        print(f"{result.name:<16} {status:<5} {result.checked} checked")
        for violation in result.violations:
            print(f"    {violation}")
        failed = failed or not result.ok
    return EXIT_VERIFY if failed else EXIT_OK


_COMMANDS = {"run": run, "verify": verify}


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] not in _COMMANDS:
        print(f"usage: topzeta {{{','.join(_COMMANDS)}}} ...", file=sys.stderr)
        return EXIT_USAGE
    return _COMMANDS[argv[0]](argv[1:])
