"""Univariate rational functions as sums of simple terms and in canonical reduced form."""

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from attrs import define, field

from topzeta.helpers.records import named_record

__all__ = ["Factor", "SimpleTermSum", "RationalFunction1V"]

Factor = Tuple[int, int]
"""``(A, B)`` standing for the linear form ``A·s − B`` with ``A ≥ 1`` and ``gcd(A, B) = 1``."""


def _factor_value(factor: Factor, s: Fraction) -> Fraction:
    A, B = factor
    return A * s - B


class SimpleTermSum:
    """``Σ c / Π (A·s − B)`` with like terms combined.

    Terms are kept in a dictionary from the sorted tuple of denominator factors to the exact
    coefficient, so sums computed in any order (e.g. by several workers) agree.
    """

    def __init__(
        self, terms: Optional[Dict[Tuple[Factor, ...], Fraction]] = None, n_terms: int = 0
    ):
        self.terms: Dict[Tuple[Factor, ...], Fraction] = dict(terms or {})
        self.n_terms = n_terms
        """How many simple terms were emitted into this sum, before combining."""

    def add_term(self, coefficient: Fraction, factors: Iterable[Factor]) -> None:
        coefficient = Fraction(coefficient)
        normalized: List[Factor] = []
        for A, B in factors:
            if A <= 0:
                raise ValueError(
                    f"Factor {A}*s - {B} must have a positive leading coefficient."
                )
            g = gcd(A, B)
            coefficient /= g
            normalized.append((A // g, B // g))
        self.n_terms += 1
        if coefficient == 0:
            return
        key = tuple(sorted(normalized))
        value = self.terms.get(key, Fraction(0)) + coefficient
        if value == 0:
            del self.terms[key]
        else:
            self.terms[key] = value

    def __iadd__(self, other: "SimpleTermSum") -> "SimpleTermSum":
        for key, c in other.terms.items():
            value = self.terms.get(key, Fraction(0)) + c
            if value == 0:
                self.terms.pop(key, None)
            else:
                self.terms[key] = value
        self.n_terms += other.n_terms
        return self

    def __add__(self, other: "SimpleTermSum") -> "SimpleTermSum":
        out = SimpleTermSum(self.terms, self.n_terms)
        out += other
        return out

    def scaled(self, c: Fraction) -> "SimpleTermSum":
        if c == 0:
            return SimpleTermSum(n_terms=self.n_terms)
        return SimpleTermSum({k: v * c for k, v in self.terms.items()}, self.n_terms)

    def is_empty(self) -> bool:
        return not self.terms

    def factors(self) -> List[Factor]:
        return sorted({f for key in self.terms for f in key})

    def evaluate(self, s: Fraction) -> Fraction:
        s = Fraction(s)
        total = Fraction(0)
        for key, c in self.terms.items():
            value = c
            for factor in key:
                value /= _factor_value(factor, s)
            total += value
        return total

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SimpleTermSum({len(self.terms)} denominators, {self.n_terms} terms)"


def _to_ints(values) -> Tuple[int, ...]:
    return tuple(int(v) for v in values)


def _to_factors(values) -> Tuple[Tuple[int, int, int], ...]:
    return tuple(sorted(tuple(int(x) for x in f) for f in values))


@named_record("rational_function")
@define(frozen=True, kw_only=True)
class RationalFunction1V:
    """``(Σ aₖ·sᵏ) / (constant · Π (A·s − B)^mult)`` in canonical form.

    The numerator has integer coefficients (ascending powers, no trailing zeros), the constant is
    positive and coprime to the content of the numerator, and no factor divides the numerator.
    """

    numerator: Tuple[int, ...] = field(converter=_to_ints, default=())
    constant: int = 1
    factors: Tuple[Tuple[int, int, int], ...] = field(converter=_to_factors, default=())
    """``(A, B, multiplicity)`` triples, sorted."""

    @classmethod
    def zero(cls) -> "RationalFunction1V":
        return cls()

    @classmethod
    def from_rational(
        cls, numerator: Sequence[Fraction], factors: Dict[Factor, int]
    ) -> "RationalFunction1V":
        """Canonicalize ``Σ numerator[k]·sᵏ / Π (A·s − B)^mult`` (no cancellation done here)."""
        coefficients = [Fraction(c) for c in numerator]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            return cls.zero()

        denominator = 1
        for c in coefficients:
            denominator = denominator * c.denominator // gcd(denominator, c.denominator)
        ints = [int(c * denominator) for c in coefficients]
        content = 0
        for c in ints:
            content = gcd(content, c)
        common = gcd(content, denominator)
        return cls(
            numerator=[c // common for c in ints],
            constant=denominator // common,
            factors=[(A, B, m) for (A, B), m in factors.items() if m > 0],
        )

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    @property
    def degree(self) -> Optional[int]:
        """Degree in ``s`` (numerator degree minus denominator degree); ``None`` for zero."""
        if self.is_zero:
            return None
        return len(self.numerator) - 1 - sum(m for _, _, m in self.factors)

    def evaluate(self, s: Fraction) -> Fraction:
        s = Fraction(s)
        value = Fraction(0)
        for c in reversed(self.numerator):
            value = value * s + c
        value /= self.constant
        for A, B, m in self.factors:
            value /= (A * s - B) ** m
        return value

    def magic(self, rank: int) -> Fraction:
        """``lim_{s→∞} s^rank·ζ(s)``."""
        if self.is_zero or self.degree < -rank:
            return Fraction(0)
        if self.degree > -rank:
            raise ValueError(f"s^{rank} times a function of degree {self.degree} diverges.")
        lead = Fraction(self.numerator[-1], self.constant)
        for A, _, m in self.factors:
            lead /= A**m
        return lead

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.numerator) - 1, -1, -1):
            c = self.numerator[k]
            if c == 0:
                continue
            power = "" if k == 0 else ("*s" if k == 1 else f"*s^{k}")
            terms.append(f"{c}{power}" if power else str(c))
        numerator = " + ".join(terms).replace("+ -", "- ")
        parts = [] if self.constant == 1 else [str(self.constant)]
        for A, B, m in self.factors:
            linear = ("s" if A == 1 else f"{A}*s") + (
                "" if B == 0 else (f" - {B}" if B > 0 else f" + {-B}")
            )
            text = linear if B == 0 and A == 1 else f"({linear})"
            parts.append(text if m == 1 else f"{text}^{m}")
        if not parts:
            return numerator
        if len(terms) > 1:
            numerator = f"({numerator})"
        denominator = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
        return f"{numerator}/{denominator}"
