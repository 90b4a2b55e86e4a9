"""Polynomial ideals over ℚ backed by ``sympy.polys`` Gröbner bases."""

import itertools
import logging
from functools import cached_property, reduce
from operator import mul
from typing import List, Sequence, Tuple

from attrs import define, field
from sympy.polys.groebnertools import groebner
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing

from topzeta.errors import MoreEquationsThanVariablesError, ZeroPolynomialError
from topzeta.laurent import LaurentPolynomial, clear_denominators, polynomial_ring

__all__ = [
    "PolyIdeal",
    "groebner_basis",
    "radical_contains",
    "jacobian_minors",
    "saturate_by_coordinates",
]

logger = logging.getLogger(__name__)


def _nonzero(polys) -> Tuple[LaurentPolynomial, ...]:
    polys = tuple(polys)
    if any(f.is_zero for f in polys):
        raise ZeroPolynomialError("Ideal generators must be nonzero.")
    return polys


def _basis(elements: Sequence[PolyElement], R: PolyRing) -> List[PolyElement]:
    elements = [g for g in elements if g != 0]
    if not elements:
        return []
    return groebner(elements, R, method="buchberger")


@define(frozen=True, slots=False, kw_only=True)
class PolyIdeal:
    """An ideal of ``ℚ[X1..Xn]`` given by generators with nonnegative exponents."""

    nvars: int
    generators: Tuple[LaurentPolynomial, ...] = field(converter=_nonzero, default=())
    order: str = "grevlex"

    @classmethod
    def from_laurent(
        cls, polys: Sequence[LaurentPolynomial], nvars: int, order: str = "grevlex"
    ) -> "PolyIdeal":
        """The ideal generated by the nonzero ``polys`` after monomial rescaling."""
        return cls(
            nvars=nvars,
            generators=[clear_denominators(f)[0] for f in polys if not f.is_zero],
            order=order,
        )

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.nvars, self.order)

    @cached_property
    def groebner_basis(self) -> Tuple[LaurentPolynomial, ...]:
        R = self.ring
        basis = _basis([f.to_ring_element(R) for f in self.generators], R)
        return tuple(LaurentPolynomial.from_ring_element(g, self.nvars) for g in basis)

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant and not g.is_zero for g in self.groebner_basis)

    def normal_form(self, g: LaurentPolynomial) -> LaurentPolynomial:
        R = self.ring
        basis = [b.to_ring_element(R) for b in self.groebner_basis]
        element = g.to_ring_element(R)
        if basis:
            element = element.rem(basis)
        return LaurentPolynomial.from_ring_element(element, self.nvars)

    def contains(self, g: LaurentPolynomial) -> bool:
        return self.normal_form(g).is_zero

    def radical_contains(self, g: LaurentPolynomial) -> bool:
        """Rabinowitsch: ``g ∈ √I`` iff ``1 ∈ I + ⟨1 − T·g⟩``."""
        if self.nvars == 0:
            return g.is_zero or any(not f.is_zero for f in self.generators)
        R = polynomial_ring(self.nvars, self.order, extra=("T",))
        T = R.gens[0]
        elements = [f.to_ring_element(R, skip=1) for f in self.generators]
        elements.append(1 - T * g.to_ring_element(R, skip=1))
        return any(b.is_ground and b != 0 for b in _basis(elements, R))

    def saturate_by_coordinates(self) -> "PolyIdeal":
        """``I : (X1⋯Xn)^∞`` by elimination of ``T`` from ``I + ⟨1 − T·X1⋯Xn⟩``."""
        if self.nvars == 0 or not self.generators:
            return self
        R = polynomial_ring(self.nvars, "lex", extra=("T",))
        T, *xs = R.gens
        elements = [f.to_ring_element(R, skip=1) for f in self.generators]
        elements.append(1 - T * reduce(mul, xs))
        kept = [
            LaurentPolynomial.from_ring_element(b, self.nvars, skip=1)
            for b in _basis(elements, R)
            if b.degree(T) <= 0
        ]
        return PolyIdeal(nvars=self.nvars, generators=kept, order=self.order)


def groebner_basis(I: PolyIdeal) -> Tuple[LaurentPolynomial, ...]:
    return I.groebner_basis


def radical_contains(I: PolyIdeal, g: LaurentPolynomial) -> bool:
    return I.radical_contains(g)


def saturate_by_coordinates(I: PolyIdeal) -> PolyIdeal:
    return I.saturate_by_coordinates()


def jacobian_minors(
    polys: Sequence[LaurentPolynomial], nvars: int
) -> List[LaurentPolynomial]:
    """All ``|J|×|J|`` minors of the ``n×|J|`` Jacobian of polynomials in ``ℚ[X1..Xn]``."""
    k = len(polys)
    if k > nvars:
        raise MoreEquationsThanVariablesError(
            f"{k} polynomials have no {k}x{k} Jacobian minors in {nvars} variables."
        )
    if k == 0:
        return [LaurentPolynomial.constant(nvars, 1)]

    R = polynomial_ring(nvars)
    domain = R.to_domain()
    elements = [f.to_ring_element(R) for f in polys]
    jacobian = [[f.diff(x) for f in elements] for x in R.gens]

    minors = []
    for rows in itertools.combinations(range(nvars), k):
        block = [[jacobian[i][j] for j in range(k)] for i in rows]
        det = DomainMatrix(block, (k, k), domain).det()
        minors.append(LaurentPolynomial.from_ring_element(R(det), nvars))
    return minors
