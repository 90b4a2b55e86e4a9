import itertools
import sys

import pytest

from topzeta.errors import DimensionMismatchError, IsRegularError, ReductionFailure
from topzeta.laurent import LaurentPolynomial, Term
from topzeta.polyhedra import HalfOpenCone
from topzeta.toric import (
    ReductionCandidate,
    ToricDatum,
    find_min_singular_subset,
    is_regular,
    is_simple,
    reduce,
    reduction_candidates,
    simplify,
)

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)
ORIGIN = HalfOpenCone.orthant(2).with_equation((1, 0), (0, 1))


def test_polynomials_must_fit_the_cone():
    with pytest.raises(DimensionMismatchError):
        ToricDatum(cone=HalfOpenCone.orthant(3), polys=[X1])


def test_trivial_datum():
    T = ToricDatum(cone=HalfOpenCone.strict_orthant(2).with_weak((-1, 0)), polys=[X1 + ONE])
    assert T.is_trivial
    assert T.is_balanced
    assert T.balance() == []
    assert is_regular(T)
    with pytest.raises(IsRegularError):
        find_min_singular_subset(T)


def test_balance_splits_along_the_normal_fan():
    T = ToricDatum(cone=HalfOpenCone.orthant(2), polys=[X1 + X2])
    assert not T.is_balanced
    pieces = T.balance()
    assert len(pieces) == 3
    assert all(P.is_balanced for P in pieces)
    for point in itertools.product(range(4), repeat=2):
        assert sum(P.cone.contains(point) for P in pieces) == 1
    forms = {P.initial_forms()[0] for P in pieces}
    assert forms == {X1, X2, X1 + X2}


def test_simplify_drops_integral_polynomials():
    T = simplify(ToricDatum(cone=HalfOpenCone.orthant(2), polys=[ONE + X1]))
    assert T.polys == ()
    assert T.cone == HalfOpenCone.orthant(2)


def test_simplify_turns_monomials_into_constraints():
    x1_over_x2 = LaurentPolynomial.monomial((1, -1))
    T = simplify(ToricDatum(cone=HalfOpenCone.strict_orthant(2), polys=[x1_over_x2]))
    assert T.polys == ()
    assert T.cone.contains((2, 1))
    assert not T.cone.contains((1, 2))
    assert is_simple(T)


def test_simplify_removes_redundant_multiples():
    f = LaurentPolynomial(nvars=2, terms=[((-1, 0), 1), ((0, -1), 1)])
    T0 = ToricDatum(cone=HalfOpenCone.strict_orthant(2), polys=[f, f.scale(2)])
    assert not is_simple(T0)
    T = simplify(T0)
    assert len(T.polys) == 1
    assert T.cone == T0.cone


def test_regular_datum():
    T = ToricDatum(cone=HalfOpenCone.strict_orthant(2), polys=[ONE + X1 + X2])
    assert T.is_balanced
    assert T.initial_forms() == (ONE,)
    assert T.weight() == 1
    assert is_regular(T)


def test_singleton_singular_set_cannot_be_reduced():
    T = ToricDatum(cone=ORIGIN, polys=[(X1 - ONE) ** 2])
    assert not is_regular(T)
    assert find_min_singular_subset(T) == (0,)
    with pytest.raises(ReductionFailure) as info:
        reduce(T)
    assert info.value.datum == T


def test_reduction_candidates_and_split():
    f1 = X2 - ONE
    f2 = X2 - X1.scale(2) + X1 * X1
    T = ToricDatum(cone=ORIGIN, polys=[f1, f2])
    J = find_min_singular_subset(T)
    assert J == (0, 1)

    candidates = reduction_candidates(T, J)
    assert len(candidates) == 6
    assert candidates == sorted(candidates, key=ReductionCandidate.sort_key)

    candidate = ReductionCandidate(i=0, j=1, t_i=Term(1, (0, 1)), t_j=Term(1, (0, 1)))
    low, high = candidate.split(T)
    assert low.polys[0] == f1
    assert low.polys[1] == (X1 - ONE) ** 2
    assert low.cone == T.cone
    assert high.is_trivial


def _laurent(*terms):
    return LaurentPolynomial(nvars=2, terms=list(terms))


# X1⁻¹ − X2⁻¹ and X1⁻² − X2⁻² on the diagonal ray, where both are their own initial forms
DIAGONAL = HalfOpenCone.orthant(2).with_equation((1, -1))
G1 = _laurent(((-1, 0), 1), ((0, -1), -1))
G2 = _laurent(((-2, 0), 1), ((0, -2), -1))


@pytest.fixture
def diagonal_datum():
    T = ToricDatum(cone=DIAGONAL, polys=[G1, G2])
    assert T.is_balanced and is_simple(T)
    assert T.weight() == 4
    assert find_min_singular_subset(T) == (0, 1)
    return T


def test_reduce_depth_increments(diagonal_datum):
    low, high = reduce(diagonal_datum)

    assert low.polys == ()
    assert low.cone.contains((0, 0))
    assert low.depth == 0

    assert high.polys == (_laurent(((1, -2), 1), ((0, -1), -1)), G2)
    assert high.cone.contains((2, 2))
    assert not high.cone.contains((0, 0))
    assert high.weight() == diagonal_datum.weight()
    assert not is_regular(high)
    assert high.depth == 1


def test_reduce_fails_at_depth_cap(diagonal_datum):
    T = diagonal_datum.evolve(depth=3)
    with pytest.raises(ReductionFailure) as info:
        reduce(T, depth_cap=3)
    assert info.value.datum == T
    assert [P.depth for P in reduce(diagonal_datum.evolve(depth=2), depth_cap=3)] == [2, 3]


def test_regular_pieces_keep_their_depth_at_the_cap(diagonal_datum, monkeypatch):
    monkeypatch.setattr(sys.modules["topzeta.toric.reduce"], "is_regular", lambda P: True)
    low, high = reduce(diagonal_datum.evolve(depth=3), depth_cap=3)
    assert high.weight() == diagonal_datum.weight()
    assert (low.depth, high.depth) == (3, 3)
