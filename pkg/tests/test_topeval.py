from fractions import Fraction

import pytest

from topzeta.errors import BadFirstColumnError, BadGammaError, DimensionMismatchError
from topzeta.euler import EulerCalculator
from topzeta.laurent import LaurentPolynomial
from topzeta.polyhedra import HalfOpenCone
from topzeta.toric import ToricDatum
from topzeta.topeval import (
    RationalFunction1V,
    SimpleTermSum,
    all_subsets,
    candidate_denominator,
    cone_CJ,
    euler_coefficient,
    evaluate_topologically,
    evaluation_points,
    interpolate,
    split_dimension,
    substitution_matrix,
    wj_reduction,
)

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)

HEISENBERG = RationalFunction1V(
    numerator=(3,), constant=2, factors=[(1, 0, 1), (1, 1, 1), (2, 3, 1)]
)


@pytest.fixture
def line_datum() -> ToricDatum:
    return ToricDatum(cone=HalfOpenCone.strict_orthant(2), polys=[ONE + X1 + X2])


def test_orthant_reduction():
    A = substitution_matrix([[1, 0, 0], [0, 0, 1]], 3, 0)
    assert A == ((1, 1, 0), (1, 0, 0), (1, 0, 1))
    S = wj_reduction(HalfOpenCone.orthant(3), A, 3, [1, 2])
    assert S.terms == {((1, 0), (1, 1)): 1}
    assert S.evaluate(5) == Fraction(1, 20)


def test_reduction_checks_its_input():
    A = substitution_matrix([[1, 0]], 2, 0)
    with pytest.raises(BadFirstColumnError):
        wj_reduction(HalfOpenCone.orthant(2), [(2, 1), (1, 0)], 2, [1])
    with pytest.raises(DimensionMismatchError):
        wj_reduction(HalfOpenCone.orthant(3), A, 3, [1])
    with pytest.raises(DimensionMismatchError):
        wj_reduction(HalfOpenCone.orthant(2), A, 2, [1, 2])
    with pytest.raises(DimensionMismatchError):
        substitution_matrix([[1, 0]], 3, 0)


def test_empty_cone_contributes_nothing():
    empty = HalfOpenCone.strict_orthant(1).with_weak((-1,))
    assert wj_reduction(empty, [(1, 1)], 1, [1]).is_empty()


def test_simple_terms_are_normalized():
    S = SimpleTermSum()
    S.add_term(1, [(2, 2)])
    assert S.terms == {((1, 1),): Fraction(1, 2)}
    S.add_term(Fraction(-1, 2), [(1, 1)])
    assert S.is_empty()
    assert S.n_terms == 2
    with pytest.raises(ValueError):
        S.add_term(1, [(0, 1)])


def test_sums_combine_exactly():
    a, b = SimpleTermSum(), SimpleTermSum()
    a.add_term(1, [(1, 0), (1, 1)])
    b.add_term(2, [(1, 1), (1, 0)])
    total = a + b
    assert total.terms == {((1, 0), (1, 1)): 3}
    assert total.n_terms == 2
    assert total.scaled(0).is_empty()


def test_candidate_denominator_and_points():
    S = SimpleTermSum()
    S.add_term(1, [(1, 0), (1, 1)])
    S.add_term(1, [(1, 0), (1, 0)])
    g = candidate_denominator(S)
    assert g == {(1, 0): 2, (1, 1): 1}
    assert evaluation_points(g, 3) == [2, 3, 4]
    assert evaluation_points({(2, 3): 1}, 2) == [2, 3]
    assert evaluation_points({}, 1) == [1]


def test_interpolation_cancels_common_factors():
    S = SimpleTermSum()
    S.add_term(1, [(1, 1)])
    S.add_term(-1, [(1, 0), (1, 1)])
    f = interpolate(S, candidate_denominator(S), seed=3)
    assert f == RationalFunction1V(numerator=(1,), factors=[(1, 0, 1)])
    assert str(f) == "1/s"


@pytest.mark.parametrize("seed", [None, 0, 7])
def test_interpolation_is_exact(seed):
    S = SimpleTermSum()
    S.add_term(Fraction(3, 2), [(1, 0), (1, 1), (2, 3)])
    f = interpolate(S, candidate_denominator(S), seed=seed)
    assert f == HEISENBERG
    for s in range(4, 9):
        assert f.evaluate(s) == S.evaluate(s)


def test_empty_sum_interpolates_to_zero():
    f = interpolate(SimpleTermSum(), {})
    assert f.is_zero
    assert f.degree is None
    assert str(f) == "0"


def test_rational_function():
    assert str(HEISENBERG) == "3/(2*s*(s - 1)*(2*s - 3))"
    assert HEISENBERG.degree == -3
    assert HEISENBERG.evaluate(3) == Fraction(1, 12)
    assert HEISENBERG.magic(3) == Fraction(3, 4)
    assert HEISENBERG.magic(2) == 0
    with pytest.raises(ValueError):
        HEISENBERG.magic(4)


def test_rational_function_canonical_form():
    f = RationalFunction1V.from_rational([Fraction(1, 2), Fraction(3, 4), 0], {(1, 0): 1})
    assert f.numerator == (2, 3)
    assert f.constant == 4
    assert f.factors == ((1, 0, 1),)
    assert str(f) == "(3*s + 2)/(4*s)"
    assert RationalFunction1V.from_rational([0, 0], {(1, 0): 1}).is_zero


def test_cone_dimensions(line_datum):
    assert cone_CJ(line_datum, ()).dimension == 2
    assert cone_CJ(line_datum, (0,)).dimension == 3
    with pytest.raises(BadGammaError):
        cone_CJ(line_datum, (), gammas=[(1, 0)])
    with pytest.raises(BadGammaError):
        cone_CJ(line_datum, (), gammas=[])


def test_evaluate_topologically(line_datum):
    S = evaluate_topologically(line_datum, [[1, 0]], [1])
    assert S.evaluate(2) == Fraction(1, 2)
    f = interpolate(S, candidate_denominator(S))
    assert str(f) == "1/s"


def test_euler_coefficients(line_datum):
    calculator = EulerCalculator()
    assert euler_coefficient(line_datum, (), calculator) == 1
    assert euler_coefficient(line_datum, (0,), calculator) == 0


def test_trivial_datum_evaluates_to_nothing():
    T = ToricDatum(cone=HalfOpenCone.strict_orthant(2).with_weak((-1, 0)), polys=[X1 + ONE])
    assert evaluate_topologically(T, [[1, 0]], [1]).is_empty()


def test_subsets():
    assert list(all_subsets(2)) == [(), (0,), (1,), (0, 1)]
    assert split_dimension([], 2) == 0
    assert split_dimension([ONE + X1 + X2], 2) == 2
    assert split_dimension([X1 * X2 - ONE], 2) == 1
