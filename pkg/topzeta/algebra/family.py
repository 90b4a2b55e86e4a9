"""The Laurent polynomials whose integrality on ``Tr_d`` describes sublattices of a given type.

A sublattice with upper triangular basis matrix ``C`` is closed under an operation ``φ`` when
every ``φ(Cₘ)·C⁻¹`` is integral. The entries of ``v·C⁻¹ = det(C)⁻¹·v·adj(C)`` are computed by
back-substitution, which only ever divides by the diagonal variables.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from topzeta.algebra.input import AlgebraInput, Mode
from topzeta.laurent import LaurentPolynomial

__all__ = ["variable_index", "diagonal_indices", "generic_matrix_rows", "laurent_family"]

logger = logging.getLogger(__name__)

Row = List[LaurentPolynomial]


def variable_index(d: int, i: int, j: int) -> int:
    """Zero-based index of the entry ``x_{ij}`` (``i ≤ j``, zero-based) in ``x₁₁,…,x₁d,x₂₂,…``."""
    if not 0 <= i <= j < d:
        raise IndexError(
            f"({i}, {j}) is not an upper triangular position of a {d}x{d} matrix."
        )
    return i * d - i * (i - 1) // 2 + (j - i)


def diagonal_indices(d: int) -> Tuple[int, ...]:
    return tuple(variable_index(d, j, j) for j in range(d))


def generic_matrix_rows(d: int) -> List[Row]:
    """Rows of the generic upper triangular matrix ``[X_{ij}]_{i≤j}``."""
    n = d * (d + 1) // 2
    zero = LaurentPolynomial.zero(n)
    rows = []
    for i in range(d):
        row = [zero] * i
        row += [LaurentPolynomial.variable(n, variable_index(d, i, j)) for j in range(i, d)]
        rows.append(row)
    return rows


def _times_inverse(v: Row, C: Sequence[Row]) -> Row:
    """``w`` with ``w·C = v`` for upper triangular ``C`` with monomial diagonal."""
    w: Row = []
    for j in range(len(v)):
        rest = v[j]
        for i in range(j):
            if not w[i].is_zero and not C[i][j].is_zero:
                rest = rest - w[i] * C[i][j]
        diagonal = C[j][j].terms[0][0]
        w.append(rest.shift(tuple(-x for x in diagonal)))
    return w


def _product(
    table: Dict[Tuple[int, int], Tuple[int, ...]], u: Row, v: Row, n: int
) -> Row:
    out = [LaurentPolynomial.zero(n) for _ in u]
    for (a, b), coeffs in table.items():
        if u[a].is_zero or v[b].is_zero:
            continue
        uv = u[a] * v[b]
        for k, c in enumerate(coeffs):
            if c:
                out[k] = out[k] + uv.scale(c)
    return out


def _apply(M: Sequence[Sequence[int]], u: Row, n: int) -> Row:
    out = [LaurentPolynomial.zero(n) for _ in u]
    for a, row in enumerate(M):
        if u[a].is_zero:
            continue
        for k, c in enumerate(row):
            if c:
                out[k] = out[k] + u[a].scale(c)
    return out


def laurent_family(algebra: AlgebraInput) -> List[LaurentPolynomial]:
    """Nonzero entries of all ``φ(Cₘ)·C⁻¹``, one representative per polynomial up to scalars.

    Subalgebras use ``φ = β(Cₘ, Cₙ)`` for all ``m, n``; ideals use the left and right
    multiplications by basis elements; submodules use the generator matrices.
    """
    d = algebra.rank
    n = algebra.nvars
    C = generic_matrix_rows(d)

    images: List[Row] = []
    if algebra.mode is Mode.SUBALGEBRA:
        table = algebra.structure_constants()
        for m in range(d):
            for k in range(d):
                images.append(_product(table, C[m], C[k], n))
    else:
        if algebra.mode is Mode.IDEAL:
            operators = algebra.multiplication_matrices()
        else:
            operators = algebra.generators
        for M in operators:
            for m in range(d):
                images.append(_apply(M, C[m], n))

    family: List[LaurentPolynomial] = []
    seen = set()
    for v in images:
        if all(x.is_zero for x in v):
            continue
        for entry in _times_inverse(v, C):
            if entry.is_zero:
                continue
            key = entry.normalized().key()
            if key not in seen:
                seen.add(key)
                family.append(entry)

    logger.info(
        "%s of rank %d give %d Laurent polynomials", algebra.mode.counts(), d, len(family)
    )
    return family
