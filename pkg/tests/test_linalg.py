from fractions import Fraction
from random import Random

import pytest

from topzeta.polyhedra.linalg import (
    int_det,
    lattice_index,
    mat_mul,
    primitive,
    rank,
    smith_normal_form,
    solve_unique,
)


def test_primitive():
    assert primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert primitive((-2, 4)) == (-1, 2)
    assert primitive((0, 0)) == (0, 0)


def test_rank_and_determinant():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([], 3) == 0
    assert int_det([[1, 2], [3, 4]]) == -2


def test_solve_unique():
    assert solve_unique([[2, 1], [1, 3]], [3, 5]) == (Fraction(4, 5), Fraction(7, 5))
    with pytest.raises(ZeroDivisionError):
        solve_unique([[1, 2], [2, 4]], [1, 1])


def test_smith_normal_form_example():
    B = [[2, 4], [6, 8]]
    C, D, A = smith_normal_form(B)
    assert D == [[2, 0], [0, 4]]
    assert mat_mul(mat_mul(C, B), A) == D
    assert abs(int_det(C)) == 1 and abs(int_det(A)) == 1


@pytest.mark.parametrize("seed", range(10))
def test_smith_normal_form_random(seed):
    rng = Random(seed)
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    B = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
    C, D, A = smith_normal_form(B)

    assert mat_mul(mat_mul(C, B), A) == D
    assert abs(int_det(C)) == 1 and abs(int_det(A)) == 1
    diagonal = [D[i][i] for i in range(min(rows, cols))]
    assert all(D[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    assert all(x >= 0 for x in diagonal)
    assert all(b % a == 0 if a else b == 0 for a, b in zip(diagonal, diagonal[1:]))


@pytest.mark.parametrize(
    "rows,index",
    [
        ([[2, 0], [0, 3]], 6),
        ([[1, 1], [1, -1]], 2),
        ([[1, 0], [1, 2]], 2),
        ([[1, 0, 0], [0, 1, 0]], 1),
        ([[2, 2, 0]], 2),
    ],
)
def test_lattice_index(rows, index):
    assert lattice_index(rows) == index
