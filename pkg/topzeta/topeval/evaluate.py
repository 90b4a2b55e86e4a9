"""Topological evaluation of regular toric data.

For a regular datum ``T`` the reduction of its zeta function is ``Σ_J e_J · red W_J`` over all
index sets ``J``. The signed Euler coefficient ``e_J`` is computed first and the cone ``C0^J`` is
only triangulated when it is nonzero; every emitted term is specialized to one variable at once.
"""

import itertools
import logging
from typing import Iterator, Optional, Sequence, Tuple

from topzeta.euler import EulerCalculator, torus_split
from topzeta.laurent import ExponentVector, LaurentPolynomial
from topzeta.polyhedra.triangulation import RayOrder
from topzeta.toric.datum import ToricDatum
from topzeta.topeval.reduction import cone_CJ, substitution_matrix, wj_reduction
from topzeta.topeval.terms import SimpleTermSum

__all__ = [
    "all_subsets",
    "split_dimension",
    "euler_coefficient",
    "evaluate_subset",
    "evaluate_topologically",
]

logger = logging.getLogger(__name__)


def all_subsets(r: int) -> Iterator[Tuple[int, ...]]:
    """All subsets of ``range(r)``, the empty one first."""
    for size in range(r + 1):
        yield from itertools.combinations(range(r), size)


def _split(polys: Sequence[LaurentPolynomial], nvars: int):
    if not polys:
        return None
    return torus_split(polys, nvars)


def split_dimension(polys: Sequence[LaurentPolynomial], nvars: int) -> int:
    """Dimension of the Minkowski sum of the Newton polytopes of ``polys`` (``0`` if none)."""
    split = _split(polys, nvars)
    return 0 if split is None else split.dimension


def euler_coefficient(
    T: ToricDatum,
    J: Sequence[int],
    calculator: EulerCalculator,
    cone_dimension: Optional[int] = None,
) -> int:
    """``e_J = Σ (−1)^(|J|+|T′|)·χ(U_T′)`` over ``T′ ⊇ J`` with ``n − d(T′) + |J| = dim C0^J``.

    Raises :py:class:`~topzeta.errors.EulerFailure` if some ``χ(U_T′)`` is out of reach.
    """
    inits = T.initial_forms()
    n = T.nvars
    J = tuple(J)
    if cone_dimension is None:
        cone_dimension = cone_CJ(T, J).dimension

    rest = [i for i in range(len(inits)) if i not in J]
    total = 0
    for size in range(len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            T_prime = tuple(sorted(J + extra))
            split = _split([inits[i] for i in T_prime], n)
            d = 0 if split is None else split.dimension
            if n - d + len(J) != cone_dimension:
                continue
            if split is None:
                chi = 1
            else:
                chi = calculator.compute(split.variety).unwrap()
            total += (-1) ** (len(J) + len(T_prime)) * chi
    return total


def evaluate_subset(
    T: ToricDatum,
    J: Sequence[int],
    beta: Sequence[Sequence[int]],
    shifts: Sequence[int],
    calculator: EulerCalculator,
    gammas: Optional[Sequence[ExponentVector]] = None,
    order: Optional[RayOrder] = None,
) -> SimpleTermSum:
    """The contribution ``e_J · red W_J`` of a single index set."""
    J = tuple(J)
    C = cone_CJ(T, J, gammas)
    if C.is_empty:
        return SimpleTermSum()
    expected = T.nvars - split_dimension(T.initial_forms(), T.nvars) + len(J)
    dimension = C.dimension
    if dimension < expected:
        return SimpleTermSum()

    e = euler_coefficient(T, J, calculator, cone_dimension=dimension)
    if e == 0:
        logger.debug("e_J = 0 for J=%s, skipping", J)
        return SimpleTermSum()

    A = substitution_matrix(beta, T.nvars, len(J))
    return wj_reduction(C, A, expected, shifts, order).scaled(e)


def evaluate_topologically(
    T: ToricDatum,
    beta: Sequence[Sequence[int]],
    shifts: Sequence[int],
    calculator: Optional[EulerCalculator] = None,
    gammas: Optional[Sequence[ExponentVector]] = None,
    order: Optional[RayOrder] = None,
) -> SimpleTermSum:
    out = SimpleTermSum()
    if T.is_trivial:
        return out
    if calculator is None:
        calculator = EulerCalculator()
    for J in all_subsets(len(T.polys)):
        out += evaluate_subset(T, J, beta, shifts, calculator, gammas, order)
    return out

