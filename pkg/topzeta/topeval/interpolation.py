"""Recover a reduced rational function from a :py:class:`SimpleTermSum` by interpolation.

``g·S`` is a polynomial of degree at most ``deg g`` for the candidate denominator ``g``, so it
is determined by ``deg g + 1`` exact evaluations; one more evaluation verifies the result.
"""

import logging
from fractions import Fraction
from math import floor
from random import Random
from typing import Dict, List, Optional

from sympy import Poly, QQ, Rational, interpolate as sympy_interpolate, symbols

from topzeta.errors import VerificationMismatchError
from topzeta.topeval.terms import Factor, RationalFunction1V, SimpleTermSum

__all__ = ["candidate_denominator", "interpolate", "evaluation_points"]

logger = logging.getLogger(__name__)

_s = symbols("s")


def candidate_denominator(S: SimpleTermSum) -> Dict[Factor, int]:
    """Each factor with the largest multiplicity it has within a single term."""
    out: Dict[Factor, int] = {}
    for key in S.terms:
        counts: Dict[Factor, int] = {}
        for factor in key:
            counts[factor] = counts.get(factor, 0) + 1
        for factor, m in counts.items():
            out[factor] = max(out.get(factor, 0), m)
    return dict(sorted(out.items()))


def evaluation_points(g: Dict[Factor, int], count: int) -> List[int]:
    """``M, M+1, …`` with ``M`` beyond every root ``B/A`` of ``g``."""
    start = 1 + max((floor(Fraction(B, A)) for A, B in g), default=0)
    return [start + k for k in range(count)]


def _g_value(g: Dict[Factor, int], s: Fraction) -> Fraction:
    value = Fraction(1)
    for (A, B), m in g.items():
        value *= (A * s - B) ** m
    return value


def _rational(x: Fraction) -> Rational:
    return Rational(x.numerator, x.denominator)


def interpolate(
    S: SimpleTermSum, g: Dict[Factor, int], seed: Optional[int] = None
) -> RationalFunction1V:
    """``g·S`` through ``deg g + 1`` consecutive points, checked at one more point.

    With a ``seed`` the check point is drawn at random beyond the interpolation points.
    """
    if S.is_empty():
        return RationalFunction1V.zero()

    degree = sum(g.values())
    points = evaluation_points(g, degree + 2)
    if seed is not None:
        points[-1] += Random(seed).randrange(1000)
    values = [_g_value(g, Fraction(x)) * S.evaluate(Fraction(x)) for x in points]
    logger.info("interpolating a numerator of degree <= %d", degree)

    data = [(x, _rational(v)) for x, v in zip(points[:-1], values[:-1])]
    numerator = Poly(sympy_interpolate(data, _s), _s, domain=QQ)

    check_x, check_v = points[-1], values[-1]
    if numerator.eval(check_x) != _rational(check_v):
        raise VerificationMismatchError(
            f"Interpolated numerator {numerator.as_expr()} disagrees with the sum at s={check_x}."
        )

    remaining = dict(g)
    for (A, B), m in g.items():
        linear = Poly(A * _s - B, _s, domain=QQ)
        while remaining[(A, B)] > 0 and not numerator.is_zero:
            quotient, rest = numerator.div(linear)
            if not rest.is_zero:
                break
            numerator = quotient
            remaining[(A, B)] -= 1

    coefficients = []
    if not numerator.is_zero:
        coefficients = [
            Fraction(int(c.p), int(c.q)) for c in reversed(numerator.all_coeffs())
        ]
    return RationalFunction1V.from_rational(coefficients, remaining)
