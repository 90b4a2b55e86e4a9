import pytest

from topzeta.errors import MoreEquationsThanVariablesError, ZeroPolynomialError
from topzeta.ideals import PolyIdeal, jacobian_minors
from topzeta.laurent import LaurentPolynomial

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)


def test_membership_and_radical():
    I = PolyIdeal(nvars=2, generators=[X1 * X1, X2])
    assert I.contains(X1 * X1 * X2 + X2)
    assert not I.contains(X1)
    assert I.radical_contains(X1)
    assert not I.radical_contains(X1 + ONE)


def test_groebner_basis_of_linear_system():
    I = PolyIdeal(nvars=2, generators=[X1 - X2, X1 + X2])
    assert I.contains(X1) and I.contains(X2)
    assert not I.is_unit


def test_unit_ideal():
    assert PolyIdeal(nvars=2, generators=[X1, X1 - ONE]).is_unit


def test_saturation_by_coordinates():
    assert PolyIdeal(nvars=2, generators=[X1 * X2]).saturate_by_coordinates().is_unit
    saturated = PolyIdeal(nvars=2, generators=[X1 * (X2 - ONE)]).saturate_by_coordinates()
    assert saturated.contains(X2 - ONE)


def test_laurent_generators_are_rescaled():
    f = LaurentPolynomial(nvars=2, terms=[((-1, 0), 1), ((0, 1), -1)])
    I = PolyIdeal.from_laurent([f], 2)
    assert I.contains(ONE - X1 * X2)


def test_jacobian_minors():
    assert jacobian_minors([X1 * X2], 2) == [X2, X1]
    (det,) = jacobian_minors([X1 * X2, X1 + X2], 2)
    assert det == X2 - X1
    with pytest.raises(MoreEquationsThanVariablesError):
        jacobian_minors([X1, X2, X1 + X2], 2)


def test_zero_generator_is_rejected():
    with pytest.raises(ZeroPolynomialError):
        PolyIdeal(nvars=2, generators=[LaurentPolynomial.zero(2)])
