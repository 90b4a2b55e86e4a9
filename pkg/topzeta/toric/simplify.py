import logging
from typing import List, Optional, Tuple

from topzeta.laurent import LaurentPolynomial, try_initial_form_on_cone
from topzeta.polyhedra import HalfOpenCone
from topzeta.toric.datum import ToricDatum

__all__ = ["simplify", "is_simple"]

logger = logging.getLogger(__name__)


def _in_dual(cone: HalfOpenCone, f: LaurentPolynomial) -> bool:
    return all(cone.dual_contains(e) for e in f.support)


def _drop_integral_terms(
    cone: HalfOpenCone, polys: List[LaurentPolynomial]
) -> Tuple[List[LaurentPolynomial], bool]:
    out, changed = [], False
    for f in polys:
        kept = [(e, c) for e, c in f.terms if not cone.dual_contains(e)]
        if len(kept) != len(f.terms):
            changed = True
            f = LaurentPolynomial(nvars=f.nvars, terms=kept)
        out.append(f)
    return out, changed


def _redundant_index(cone: HalfOpenCone, polys: List[LaurentPolynomial]) -> Optional[int]:
    """An ``i`` such that ``fᵢ = u·fⱼ`` for some ``j ≠ i`` and ``u`` supported in ``C0*``."""
    for i, f in enumerate(polys):
        for j, g in enumerate(polys):
            if i == j:
                continue
            quotient = f.divide(g)
            if quotient is not None and _in_dual(cone, quotient):
                return i
    return None


def _monomial_index(
    cone: HalfOpenCone, polys: List[LaurentPolynomial]
) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """An ``i`` whose initial form on the cone is a single term, with that term's exponent."""
    for i, f in enumerate(polys):
        init = try_initial_form_on_cone(f, cone)
        if init is not None and init.is_term:
            return i, init.support[0]
    return None


def simplify(T: ToricDatum) -> ToricDatum:
    """Apply the simplification rules until none changes the datum.

    In turn: remove terms whose exponents lie in ``C0*``, drop zero polynomials, drop ``fᵢ``
    if it is a multiple of another ``fⱼ`` by a polynomial supported in ``C0*``, and replace a
    polynomial whose initial form is a term ``c·X^α`` by the condition ``⟨α, ω⟩ ≥ 0``.
    """
    cone, polys = T.cone, list(T.polys)
    while True:
        if cone.is_empty:
            return T.evolve(cone=cone, polys=polys)

        polys, changed = _drop_integral_terms(cone, polys)
        nonzero = [f for f in polys if not f.is_zero]
        if len(nonzero) != len(polys):
            polys, changed = nonzero, True
        if changed:
            continue

        i = _redundant_index(cone, polys)
        if i is not None:
            del polys[i]
            continue

        found = _monomial_index(cone, polys)
        if found is not None:
            i, alpha = found
            del polys[i]
            cone = cone.with_weak(alpha)
            continue

        return T.evolve(cone=cone, polys=polys)


def is_simple(T: ToricDatum) -> bool:
    """Whether :py:func:`simplify` would leave ``T`` unchanged."""
    if T.is_trivial:
        return True
    polys = list(T.polys)
    if any(f.is_zero for f in polys):
        return False
    if any(T.cone.dual_contains(e) for f in polys for e in f.support):
        return False
    return (
        _redundant_index(T.cone, polys) is None and _monomial_index(T.cone, polys) is None
    )
