"""Exceptions raised throughout the package.

Everything derives from :py:class:`ZetaError`. The two failure types
(:py:class:`ReductionFailure`, :py:class:`EulerFailure`) are the only ones that a complete run
may legitimately end with; all others signal invalid input or an internal bug.
"""

from typing import Any, Optional

__all__ = [
    "ZetaError",
    "ZeroPolynomialError",
    "EmptyConeError",
    "NotBalancedError",
    "DimensionMismatchError",
    "BadFirstColumnError",
    "BadGammaError",
    "IsRegularError",
    "MoreEquationsThanVariablesError",
    "DegenerateError",
    "VerificationMismatchError",
    "ReductionFailure",
    "EulerFailure",
    "InputDocumentError",
]


class ZetaError(Exception):
    pass


class ZeroPolynomialError(ZetaError, ValueError):
    pass


class EmptyConeError(ZetaError, ValueError):
    pass


class NotBalancedError(ZetaError):
    pass


class DimensionMismatchError(ZetaError, ValueError):
    pass


class BadFirstColumnError(ZetaError, ValueError):
    pass


class BadGammaError(ZetaError, ValueError):
    pass


class IsRegularError(ZetaError):
    pass


class MoreEquationsThanVariablesError(ZetaError, ValueError):
    pass


class DegenerateError(ZetaError):
    pass


class VerificationMismatchError(ZetaError, ArithmeticError):
    pass


class ReductionFailure(ZetaError):
    """Stage I gave up on a singular toric datum."""

    def __init__(self, reason: str, datum: Optional[Any] = None) -> None:
        super().__init__(reason)
        self.reason = reason
        self.datum = datum
        """The offending :py:class:`topzeta.toric.ToricDatum`, if known."""


class EulerFailure(ZetaError):
    """No implemented method determines the Euler characteristic of a torus variety."""

    def __init__(self, reason: str, variety: Optional[Any] = None) -> None:
        super().__init__(reason)
        self.reason = reason
        self.variety = variety
        """The offending :py:class:`topzeta.euler.TorusVariety`, if known."""


class InputDocumentError(ZetaError, ValueError):
    pass
