"""Exact integer and rational linear algebra on plain nested lists."""

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

__all__ = [
    "IntVector",
    "IntMatrix",
    "Rational",
    "dot",
    "primitive",
    "identity",
    "transpose",
    "mat_mul",
    "vec_mat",
    "rank",
    "int_det",
    "solve_unique",
    "smith_normal_form",
    "lattice_index",
]

IntVector = Tuple[int, ...]
IntMatrix = List[List[int]]
Rational = Union[int, Fraction]


def dot(u: Sequence[Rational], v: Sequence[Rational]) -> Rational:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[Rational]) -> IntVector:
    """Scale a nonzero rational vector by a positive factor to a primitive integer vector."""
    fracs = [Fraction(x) for x in v]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[Rational]], ncols: Optional[int] = None) -> List[List]:
    if ncols is None:
        ncols = len(M[0]) if M else 0
    return [[row[j] for row in M] for j in range(ncols)]


def mat_mul(A: Sequence[Sequence[Rational]], B: Sequence[Sequence[Rational]]) -> List[List]:
    ncols = len(B[0]) if B else 0
    return [[dot(row, [B[k][j] for k in range(len(B))]) for j in range(ncols)] for row in A]


def vec_mat(v: Sequence[Rational], M: Sequence[Sequence[Rational]]) -> Tuple:
    """The row vector v·M."""
    ncols = len(M[0]) if M else 0
    return tuple(sum(v[k] * M[k][j] for k in range(len(M))) for j in range(ncols))


def _qq(x: Rational):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _to_qq_matrix(rows: Sequence[Sequence[Rational]], ncols: int) -> DomainMatrix:
    return DomainMatrix([[_qq(x) for x in row] for row in rows], (len(rows), ncols), QQ)


def rank(rows: Sequence[Sequence[Rational]], ncols: Optional[int] = None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if ncols == 0:
        return 0
    return _to_qq_matrix(rows, ncols).rank()


def int_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    return int(DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (n, n), ZZ).det())


def solve_unique(
    matrix: Sequence[Sequence[Rational]], rhs: Sequence[Rational]
) -> Tuple[Fraction, ...]:
    """Solve the square nonsingular system ``matrix · x = rhs`` exactly."""
    n = len(matrix)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots = _to_qq_matrix(augmented, n + 1).rref()
    if tuple(pivots) != tuple(range(n)):
        raise ZeroDivisionError("singular system")
    table = reduced.to_Matrix().tolist()
    return tuple(Fraction(int(table[i][n].p), int(table[i][n].q)) for i in range(n))


def _swap_rows(M: IntMatrix, i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: IntMatrix, i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: IntMatrix, target: int, source: int, factor: int) -> None:
    if factor:
        M[target] = [a + factor * b for a, b in zip(M[target], M[source])]


def _add_col(M: IntMatrix, target: int, source: int, factor: int) -> None:
    if factor:
        for row in M:
            row[target] += factor * row[source]


def smith_normal_form(
    B: Sequence[Sequence[int]], ncols: Optional[int] = None
) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``C·B·A = D`` of an integer matrix.

    Returns unimodular ``C`` (rows×rows) and ``A`` (cols×cols) and the diagonal ``D`` whose
    nonnegative diagonal entries satisfy ``D[i][i] | D[i+1][i+1]``.
    """
    m = len(B)
    n = len(B[0]) if m else (ncols or 0)
    D = [[int(x) for x in row] for row in B]
    C = identity(m)
    A = identity(n)

    for t in range(min(m, n)):
        while True:
            candidates = [
                (abs(D[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if D[i][j] != 0
            ]
            if not candidates:
                return C, D, A
            _, pi, pj = min(candidates)
            _swap_rows(D, t, pi)
            _swap_rows(C, t, pi)
            _swap_cols(D, t, pj)
            _swap_cols(A, t, pj)

            pivot = D[t][t]
            clear = True
            for i in range(t + 1, m):
                q = D[i][t] // pivot
                _add_row(D, i, t, -q)
                _add_row(C, i, t, -q)
                clear = clear and D[i][t] == 0
            for j in range(t + 1, n):
                q = D[t][j] // pivot
                _add_col(D, j, t, -q)
                _add_col(A, j, t, -q)
                clear = clear and D[t][j] == 0
            if not clear:
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            # the remainder shows up in row t and becomes the next pivot
            _add_row(D, t, offender, 1)
            _add_row(C, t, offender, 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            C[t] = [-x for x in C[t]]

    return C, D, A


def lattice_index(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    """Index of the lattice spanned by ``rows`` in its saturation."""
    _, D, _ = smith_normal_form(rows, ncols)
    index = 1
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i]:
            index *= D[i][i]
    return index
