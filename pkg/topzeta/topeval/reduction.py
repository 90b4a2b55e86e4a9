"""The cones ``C0^J``, substitution matrices ``A_J(β)`` and the reduction modulo ``q − 1``."""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from topzeta.errors import BadFirstColumnError, BadGammaError, DimensionMismatchError
from topzeta.laurent import ExponentVector
from topzeta.polyhedra import HalfOpenCone, triangulate
from topzeta.polyhedra.linalg import IntMatrix, dot
from topzeta.polyhedra.triangulation import RayOrder
from topzeta.toric.datum import ToricDatum
from topzeta.topeval.terms import SimpleTermSum

__all__ = ["choose_gammas", "cone_CJ", "substitution_matrix", "wj_reduction"]

logger = logging.getLogger(__name__)


def choose_gammas(T: ToricDatum) -> Tuple[ExponentVector, ...]:
    """The lexicographically smallest exponent of every initial form."""
    return tuple(g.support[0] for g in T.initial_forms())


def cone_CJ(
    T: ToricDatum, J: Sequence[int], gammas: Optional[Sequence[ExponentVector]] = None
) -> HalfOpenCone:
    """``(C0 × StrictOrth^J) ∩ {(ξ, o) : ⟨γᵢ, ξ⟩ + ⟨δᵢⱼ, o⟩ ≥ 0 for all i}`` in ``ℝ^(n+|J|)``."""
    inits = T.initial_forms()
    if gammas is None:
        gammas = choose_gammas(T)
    if len(gammas) != len(inits):
        raise BadGammaError(f"Expected {len(inits)} exponents, got {len(gammas)}.")
    for i, (gamma, init) in enumerate(zip(gammas, inits)):
        if tuple(gamma) not in init.support:
            raise BadGammaError(
                f"{gamma} is not an exponent of the initial form {init} of f{i}."
            )

    J = tuple(J)
    rows = []
    for i, gamma in enumerate(gammas):
        delta = tuple(int(i == j) for j in J)
        rows.append(tuple(gamma) + delta)
    return T.cone.product(HalfOpenCone.strict_orthant(len(J))).with_weak(*rows)


def substitution_matrix(beta: Sequence[Sequence[int]], nvars: int, extra: int) -> IntMatrix:
    """``A_J(β)``: rows ``(1, β₁[i], …, β_m[i])`` for the ``n`` variables, ``(1, 0, …)`` for ``o``."""
    for row in beta:
        if len(row) != nvars:
            raise DimensionMismatchError(
                f"Row {row} of beta does not have {nvars} entries."
            )
    m = len(beta)
    rows = [(1,) + tuple(int(beta[j][i]) for j in range(m)) for i in range(nvars)]
    rows += [(1,) + (0,) * m for _ in range(extra)]
    return tuple(rows)


def wj_reduction(
    C: HalfOpenCone,
    A: Sequence[Sequence[int]],
    d: int,
    shifts: Sequence[int],
    order: Optional[RayOrder] = None,
) -> SimpleTermSum:
    """The reduction of ``(q−1)^d·gen_C^A(q⁻¹, t)`` specialized along ``sⱼ ↦ s − cⱼ``.

    Only the ``d``-dimensional simplicial cones of a triangulation of the closure contribute,
    each with ``mult(σ) / Π_ρ ⟨ρA, (1, s₁, …, s_m)⟩``.
    """
    if len(A) != C.dim:
        raise DimensionMismatchError(
            f"Substitution matrix needs {C.dim} rows, got {len(A)}."
        )
    if any(row[0] != 1 for row in A) or any(x < 0 for row in A for x in row):
        raise BadFirstColumnError(
            "Substitution matrices must be nonnegative with first column 1."
        )
    m = len(A[0]) - 1 if A else 0
    if len(shifts) != m:
        raise DimensionMismatchError(
            f"Expected {m} specialization shifts, got {len(shifts)}."
        )

    out = SimpleTermSum()
    if C.is_empty:
        return out
    if C.dimension != d:
        raise DimensionMismatchError(
            f"Cone of dimension {C.dimension} is not {d}-dimensional."
        )

    columns = [[row[j] for row in A] for j in range(m + 1)]
    for sigma in triangulate(C.closure, order):
        if len(sigma.rays) != d:
            continue
        coefficient = Fraction(sigma.multiplicity)
        factors = []
        for rho in sigma.rays:
            b = dot(rho, columns[0])
            a = [dot(rho, columns[j + 1]) for j in range(m)]
            slope = sum(a)
            if slope == 0:
                coefficient /= b
            else:
                factors.append((slope, sum(x * c for x, c in zip(a, shifts)) - b))
        out.add_term(coefficient, factors)
    return out
