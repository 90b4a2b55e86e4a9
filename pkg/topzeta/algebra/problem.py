import logging
from typing import Tuple

from attrs import define, field

from topzeta.algebra.family import diagonal_indices, laurent_family
from topzeta.algebra.input import AlgebraInput
from topzeta.polyhedra import HalfOpenCone
from topzeta.toric import ToricDatum

__all__ = ["ProblemInstance", "build_problem"]

logger = logging.getLogger(__name__)


def _to_matrix(rows) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


@define(frozen=True, kw_only=True)
class ProblemInstance:
    algebra: AlgebraInput
    datum: ToricDatum
    """``(Orthⁿ; family)`` with ``n = d(d+1)/2``."""
    beta: Tuple[Tuple[int, ...], ...] = field(converter=_to_matrix)
    """``d×n``; row ``j`` picks the diagonal coordinate ``x_jj``."""
    shifts: Tuple[int, ...] = field(converter=lambda v: tuple(int(x) for x in v))
    """The specialization ``sⱼ ↦ s − shifts[j]``."""

    @property
    def rank(self) -> int:
        return self.algebra.rank


def build_problem(algebra: AlgebraInput) -> ProblemInstance:
    d, n = algebra.rank, algebra.nvars
    datum = ToricDatum(cone=HalfOpenCone.orthant(n), polys=laurent_family(algebra))
    beta = [[int(i == k) for i in range(n)] for k in diagonal_indices(d)]
    logger.info(
        "initial toric datum in %d variables with %d polynomials", n, len(datum.polys)
    )
    return ProblemInstance(
        algebra=algebra, datum=datum, beta=beta, shifts=range(1, d + 1)
    )
