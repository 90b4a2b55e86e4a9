import pytest

from topzeta.errors import DegenerateError, EulerFailure
from topzeta.euler import (
    EulerCalculator,
    EulerRecord,
    MemoryEulerCache,
    TorusVariety,
    bkk_euler,
    euler_characteristic,
    khovanskii_nondegenerate,
)
from topzeta.laurent import LaurentPolynomial

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)
T = LaurentPolynomial.variable(1, 0)
UNIT = LaurentPolynomial.constant(1, 1)


@pytest.mark.parametrize(
    "variety,value",
    [
        (TorusVariety(nvars=2, polys=[X1 + X2 + ONE]), -1),
        (TorusVariety(nvars=2, polys=[X1 - ONE]), 0),
        (TorusVariety(nvars=2, polys=[X1 + X2 + ONE, X1 - X2]), 1),
        (TorusVariety(nvars=2, polys=[X1 * X2]), 0),
        (TorusVariety(nvars=3), 0),
        (TorusVariety(nvars=0), 1),
        (TorusVariety(nvars=1, polys=[T - UNIT]), 1),
        (TorusVariety(nvars=1, polys=[(T - UNIT) * (T - UNIT.scale(2))]), 2),
        (TorusVariety(nvars=1, polys=[(T - UNIT) ** 2]), 1),
    ],
)
def test_euler_characteristic(variety, value):
    result = euler_characteristic(variety)
    assert result.ok
    assert result.unwrap() == value


def test_khovanskii_formula():
    line = TorusVariety(nvars=2, polys=[X1 + X2 + ONE])
    assert khovanskii_nondegenerate(line)
    assert bkk_euler(line).value == -1

    double = TorusVariety(nvars=1, polys=[(T - UNIT) ** 2])
    assert not khovanskii_nondegenerate(double)
    with pytest.raises(DegenerateError):
        bkk_euler(double)


def test_results_are_stored():
    store = MemoryEulerCache()
    V = TorusVariety(nvars=2, polys=[X1 + X2 + ONE])
    assert EulerCalculator(store=store).compute(V).value == -1
    assert store.get(V.key()).value == -1


def test_stored_failures_are_reported():
    store = MemoryEulerCache()
    V = TorusVariety(nvars=2, polys=[X1 + X2 + ONE])
    store.put(EulerRecord(key=V.key(), nvars=2, failure="no method"))
    result = EulerCalculator(store=store).compute(V)
    assert not result.ok
    assert result.failure == "no method"
    with pytest.raises(EulerFailure):
        result.unwrap()
