from topzeta.cli.checks import SUITES, CheckResult, VerifyConfig, run_checks
from topzeta.cli.commands import (
    EXIT_EULER,
    EXIT_OK,
    EXIT_REDUCE,
    EXIT_USAGE,
    EXIT_VERIFY,
    OutputConfig,
    main,
    run,
    verify,
)
from topzeta.cli.documents import InputDocument, OutputDocument, load_input

__all__ = [
    "InputDocument",
    "OutputDocument",
    "OutputConfig",
    "VerifyConfig",
    "CheckResult",
    "SUITES",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_REDUCE",
    "EXIT_EULER",
    "EXIT_VERIFY",
    "load_input",
    "run_checks",
    "run",
    "verify",
    "main",
]
