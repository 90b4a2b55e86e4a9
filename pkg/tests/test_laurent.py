from fractions import Fraction

import pytest

from topzeta.errors import NotBalancedError, ZeroPolynomialError
from topzeta.laurent import (
    LaurentPolynomial,
    Term,
    clear_denominators,
    initial_form_on_cone,
    try_initial_form_on_cone,
)
from topzeta.polyhedra import HalfOpenCone

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)


def test_terms_are_merged_and_zeros_dropped():
    f = LaurentPolynomial(nvars=2, terms=[((1, 0), 1), ((1, 0), 2), ((0, 1), 0)])
    assert f.terms == (((1, 0), Fraction(3)),)
    assert (X1 - X1).is_zero


def test_arithmetic():
    assert (X1 + ONE) ** 2 == X1 * X1 + X1.scale(2) + ONE
    assert str(X1 - X2) == "X1 - X2"
    assert (X1.scale(2) + ONE.scale(4)).normalized() == X1 + ONE.scale(2)


def test_zero_term_is_rejected():
    with pytest.raises(ZeroPolynomialError):
        Term(0, (1, 0))


@pytest.mark.parametrize(
    "omega,expected",
    [
        ((1, 1), ONE),
        ((0, 1), X1 + ONE),
        ((1, 0), X2 + ONE),
        ((0, 0), X1 + X2 + ONE),
    ],
)
def test_initial_form(omega, expected):
    assert (X1 + X2 + ONE).initial_form(omega) == expected


def test_initial_form_on_cone():
    f = X1 + X2
    assert try_initial_form_on_cone(f, HalfOpenCone.orthant(2)) is None
    assert try_initial_form_on_cone(f, HalfOpenCone.orthant(2).with_weak((1, -1))) is None

    above = HalfOpenCone.orthant(2).with_strict((1, -1))
    assert try_initial_form_on_cone(f, above) == X2
    with pytest.raises(NotBalancedError):
        initial_form_on_cone(f, HalfOpenCone.orthant(2))


def test_zero_polynomial_has_no_newton_polytope():
    with pytest.raises(ZeroPolynomialError):
        LaurentPolynomial.zero(2).newton_polytope()


def test_clear_denominators():
    f = LaurentPolynomial(nvars=2, terms=[((-1, 0), 1), ((0, 2), 1)])
    cleared, gamma = clear_denominators(f)
    assert gamma == (1, 0)
    assert cleared == LaurentPolynomial(nvars=2, terms=[((0, 0), 1), ((1, 2), 1)])


def test_divide():
    x = LaurentPolynomial.variable(1, 0)
    one = LaurentPolynomial.constant(1, 1)
    assert (x * x - one).divide(x - one) == x + one
    assert (x * x + one).divide(x - one) is None

    laurent = x - LaurentPolynomial.monomial((-1,))
    assert laurent.divide(x - one) == one + LaurentPolynomial.monomial((-1,))


def test_newton_polytope():
    P = (X1 + X2 + ONE).newton_polytope()
    assert P.vertices == ((0, 0), (0, 1), (1, 0))
    assert P.normalized_volume == 1
