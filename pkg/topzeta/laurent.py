"""Exact Laurent polynomials over ℚ.

A :py:class:`LaurentPolynomial` is an immutable, canonically ordered map from exponent vectors to
nonzero rationals. Polynomial-ring work (division, Gröbner bases) happens in
``sympy.polys.rings`` after clearing denominators, see :py:func:`clear_denominators`.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from attrs import define, field
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from topzeta.errors import EmptyConeError, NotBalancedError, ZeroPolynomialError
from topzeta.helpers.records import named_record
from topzeta.polyhedra import HalfOpenCone, Polytope
from topzeta.polyhedra.linalg import IntVector, Rational, dot, vec_mat

__all__ = [
    "ExponentVector",
    "Term",
    "LaurentPolynomial",
    "support",
    "newton_polytope",
    "initial_form",
    "initial_form_on_cone",
    "try_initial_form_on_cone",
    "clear_denominators",
    "polynomial_ring",
]

logger = logging.getLogger(__name__)

ExponentVector = IntVector
Coefficient = Union[int, Fraction, str]

_ORDERS = {"grevlex": grevlex, "lex": lex}


@lru_cache(maxsize=None)
def polynomial_ring(
    nvars: int, order: str = "grevlex", extra: Tuple[str, ...] = ()
) -> PolyRing:
    """``ℚ[X1..Xn]`` (optionally with extra variables placed first) as a sympy ``PolyRing``."""
    names = list(extra) + [f"X{i}" for i in range(1, nvars + 1)]
    R, *_ = ring(names, QQ, _ORDERS[order])
    return R


def _canonical_terms(
    terms: Union[
        Mapping[Sequence[int], Coefficient], Iterable[Tuple[Sequence[int], Coefficient]]
    ]
) -> Tuple[Tuple[ExponentVector, Fraction], ...]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    merged: Dict[ExponentVector, Fraction] = {}
    for exponent, coefficient in items:
        key = tuple(int(x) for x in exponent)
        merged[key] = merged.get(key, Fraction(0)) + Fraction(coefficient)
    return tuple(sorted((k, v) for k, v in merged.items() if v != 0))


@define(frozen=True)
class Term:
    """A single term ``c·X^α`` with ``c ≠ 0``."""

    coefficient: Fraction = field(converter=Fraction)
    exponent: ExponentVector = field(converter=lambda v: tuple(int(x) for x in v))

    def __attrs_post_init__(self):
        if self.coefficient == 0:
            raise ZeroPolynomialError("A term must have a nonzero coefficient.")

    def __truediv__(self, other: "Term") -> "Term":
        return Term(
            self.coefficient / other.coefficient,
            tuple(a - b for a, b in zip(self.exponent, other.exponent)),
        )

    def as_polynomial(self) -> "LaurentPolynomial":
        return LaurentPolynomial.monomial(self.exponent, self.coefficient)

    def sort_key(self) -> Tuple:
        return (self.exponent, self.coefficient)


@named_record("laurent_polynomial")
@define(frozen=True, kw_only=True)
class LaurentPolynomial:
    nvars: int
    terms: Tuple[Tuple[ExponentVector, Fraction], ...] = field(
        converter=_canonical_terms, default=()
    )
    """Sorted ``(exponent, coefficient)`` pairs, no zero coefficients."""

    def __attrs_post_init__(self):
        for exponent, _ in self.terms:
            if len(exponent) != self.nvars:
                raise ValueError(f"Exponent {exponent} does not have {self.nvars} entries.")

    # --- constructors -------------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars=nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "LaurentPolynomial":
        return cls(nvars=nvars, terms=[((0,) * nvars, value)])

    @classmethod
    def monomial(
        cls, exponent: Sequence[int], coefficient: Coefficient = 1
    ) -> "LaurentPolynomial":
        return cls(nvars=len(exponent), terms=[(exponent, coefficient)])

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPolynomial":
        """The variable ``X_{index+1}`` (``index`` is zero-based)."""
        return cls.monomial(tuple(int(i == index) for i in range(nvars)))

    @classmethod
    def from_ring_element(
        cls, element: PolyElement, nvars: int, skip: int = 0
    ) -> "LaurentPolynomial":
        """Convert a sympy ring element, dropping the first ``skip`` (auxiliary) variables."""
        return cls(
            nvars=nvars,
            terms=[
                (monom[skip:], Fraction(int(c.numerator), int(c.denominator)))
                for monom, c in element.items()
            ],
        )

    # --- queries -------------------------------------------------------------------------

    @property
    def support(self) -> Tuple[ExponentVector, ...]:
        return tuple(exponent for exponent, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_term(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return self.is_zero or (self.is_term and not any(self.terms[0][0]))

    def term_list(self) -> Tuple[Term, ...]:
        return tuple(Term(c, e) for e, c in self.terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return dict(self.terms).get(tuple(exponent), Fraction(0))

    def newton_polytope(self) -> Polytope:
        if self.is_zero:
            raise ZeroPolynomialError("The zero polynomial has no Newton polytope.")
        return Polytope(dim=self.nvars, points=self.support)

    def initial_form(self, omega: Sequence[Rational]) -> "LaurentPolynomial":
        if self.is_zero:
            raise ZeroPolynomialError("The zero polynomial has no initial forms.")
        values = [dot(e, omega) for e, _ in self.terms]
        low = min(values)
        return LaurentPolynomial(
            nvars=self.nvars, terms=[t for t, v in zip(self.terms, values) if v == low]
        )

    def key(self) -> Tuple:
        return (self.nvars, self.terms)

    # --- arithmetic ----------------------------------------------------------------------

    def _check(self, other: "LaurentPolynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError(
                f"Polynomials in {self.nvars} and {other.nvars} variables cannot be combined."
            )

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        return LaurentPolynomial(nvars=self.nvars, terms=self.terms + other.terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(nvars=self.nvars, terms=[(e, -c) for e, c in self.terms])

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPolynomial", Rational]) -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return self.scale(other)
        self._check(other)
        return LaurentPolynomial(
            nvars=self.nvars,
            terms=[
                (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ],
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError(
                "Only nonnegative powers of Laurent polynomials are polynomials."
            )
        out = LaurentPolynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Rational) -> "LaurentPolynomial":
        return LaurentPolynomial(
            nvars=self.nvars, terms=[(e, c * v) for e, v in self.terms]
        )

    def shift(self, alpha: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by ``X^α``."""
        return LaurentPolynomial(
            nvars=self.nvars,
            terms=[(tuple(a + b for a, b in zip(e, alpha)), c) for e, c in self.terms],
        )

    def mul_term(self, term: Term) -> "LaurentPolynomial":
        return self.shift(term.exponent).scale(term.coefficient)

    def normalized(self) -> "LaurentPolynomial":
        """Rescaled so that the coefficient of the largest exponent is 1."""
        if self.is_zero:
            return self
        return self.scale(1 / self.terms[-1][1])

    def substitute_exponents(self, A: Sequence[Sequence[int]]) -> "LaurentPolynomial":
        """The monomial change ``X^v ↦ X^(vA)``."""
        ncols = len(A[0]) if A else 0
        return LaurentPolynomial(
            nvars=ncols, terms=[(vec_mat(e, A), c) for e, c in self.terms]
        )

    def restrict(self, nvars: int) -> "LaurentPolynomial":
        """Drop trailing variables that do not occur."""
        if any(any(e[nvars:]) for e in self.support):
            raise ValueError(f"{self} involves variables beyond X{nvars}.")
        return LaurentPolynomial(nvars=nvars, terms=[(e[:nvars], c) for e, c in self.terms])

    def divide(self, other: "LaurentPolynomial") -> Optional["LaurentPolynomial"]:
        """``self / other`` if it is a Laurent polynomial, else ``None``."""
        self._check(other)
        if other.is_zero:
            raise ZeroPolynomialError("Division by the zero polynomial.")
        if self.is_zero:
            return self
        if self.nvars == 0:
            return self.scale(1 / other.terms[0][1])
        num, a = _monomial_free(self)
        den, b = _monomial_free(other)
        R = polynomial_ring(self.nvars)
        q, r = num.to_ring_element(R).div(den.to_ring_element(R))
        if r != 0:
            return None
        return LaurentPolynomial.from_ring_element(q, self.nvars).shift(
            tuple(y - x for x, y in zip(a, b))
        )

    def to_ring_element(self, R: PolyRing, skip: int = 0) -> PolyElement:
        """As an element of ``R`` whose first ``skip`` variables are auxiliary."""
        if any(x < 0 for e in self.support for x in e):
            raise ValueError(f"{self} has negative exponents; clear denominators first.")
        return R.from_dict(
            {(0,) * skip + e: QQ(c.numerator, c.denominator) for e, c in self.terms}
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exponent, c in reversed(self.terms):
            factors = [
                f"X{i + 1}" if x == 1 else f"X{i + 1}^{x}"
                for i, x in enumerate(exponent)
                if x != 0
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def support(f: LaurentPolynomial) -> FrozenSet[ExponentVector]:
    return frozenset(f.support)


def newton_polytope(f: LaurentPolynomial) -> Polytope:
    return f.newton_polytope()


def initial_form(f: LaurentPolynomial, omega: Sequence[Rational]) -> LaurentPolynomial:
    return f.initial_form(omega)


def try_initial_form_on_cone(
    f: LaurentPolynomial, C0: HalfOpenCone
) -> Optional[LaurentPolynomial]:
    """The common initial form of ``f`` on ``C0``, or ``None`` if it varies over ``C0``."""
    if f.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no initial forms.")
    if C0.is_empty:
        raise EmptyConeError("Initial forms on an empty cone are not defined.")
    if f.is_term:
        return f

    candidate = f.initial_form(C0.interior_point())
    base = candidate.support[0]
    for exponent in candidate.support[1:]:
        diff = tuple(a - b for a, b in zip(exponent, base))
        if not (C0.dual_contains(diff) and C0.dual_contains(tuple(-x for x in diff))):
            return None
    inside = set(candidate.support)
    for exponent in f.support:
        if exponent in inside:
            continue
        # ⟨α - base, ω⟩ > 0 must hold on all of C0
        if not C0.with_weak(tuple(b - a for a, b in zip(exponent, base))).is_empty:
            return None
    return candidate


def initial_form_on_cone(f: LaurentPolynomial, C0: HalfOpenCone) -> LaurentPolynomial:
    out = try_initial_form_on_cone(f, C0)
    if out is None:
        raise NotBalancedError(f"The initial form of {f} is not constant on {C0}.")
    return out


def clear_denominators(f: LaurentPolynomial) -> Tuple[LaurentPolynomial, ExponentVector]:
    """``(X^γ·f, γ)`` with ``γ`` componentwise minimal such that all exponents are ``≥ 0``."""
    if f.is_zero:
        raise ZeroPolynomialError("Cannot clear denominators of the zero polynomial.")
    gamma = tuple(max(0, -min(e[i] for e in f.support)) for i in range(f.nvars))
    return f.shift(gamma), gamma


def _monomial_free(f: LaurentPolynomial) -> Tuple[LaurentPolynomial, ExponentVector]:
    """Like :py:func:`clear_denominators`, but also divides out every variable factor."""
    gamma = tuple(-min(e[i] for e in f.support) for i in range(f.nvars))
    return f.shift(gamma), gamma
