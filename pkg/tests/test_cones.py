import pytest

from topzeta.errors import DimensionMismatchError, EmptyConeError
from topzeta.polyhedra import Cone, HalfOpenCone


def test_orthants():
    closed = HalfOpenCone.orthant(2)
    assert not closed.is_empty
    assert closed.dimension == 2
    assert closed.contains((0, 0))

    open_ = HalfOpenCone.strict_orthant(2)
    assert not open_.contains((1, 0))
    assert open_.contains((1, 1))
    assert open_.closure.rays == ((0, 1), (1, 0))


@pytest.mark.parametrize(
    "cone,empty",
    [
        (HalfOpenCone.strict_orthant(2).with_equation((1, 0)), True),
        (HalfOpenCone.orthant(2).with_equation((1, 0), (0, 1)), False),
        (HalfOpenCone.orthant(2).with_strict((1, -1), (-1, 1)), True),
        (HalfOpenCone.orthant(2).with_strict((0, 0)), True),
        (HalfOpenCone.ambient(0), False),
        (HalfOpenCone.strict_orthant(1).with_weak((-1,)), True),
    ],
)
def test_emptiness(cone, empty):
    assert cone.is_empty is empty


def test_dimension_with_equation():
    assert HalfOpenCone.orthant(3).with_equation((1, -1, 0)).dimension == 2
    assert HalfOpenCone.strict_orthant(2).with_equation((1, 0)).dimension == -1


def test_closure_and_dual():
    C = HalfOpenCone.orthant(2).with_weak((1, -1))
    assert set(C.closure.rays) == {(1, 0), (1, 1)}
    assert C.dual_contains((1, -1))
    assert not C.dual_contains((-1, 1))


def test_closure_of_empty_cone():
    with pytest.raises(EmptyConeError):
        HalfOpenCone.strict_orthant(1).with_weak((-1,)).closure


def test_interior_point():
    C = HalfOpenCone.strict_orthant(2).with_weak((1, -2))
    assert C.contains(C.interior_point())


def test_product():
    C = HalfOpenCone.orthant(2).product(HalfOpenCone.strict_orthant(1))
    assert C.dim == 3
    assert C.contains((0, 0, 1))
    assert not C.contains((0, 0, 0))


def test_constraints_are_canonical():
    a = HalfOpenCone.orthant(2).with_weak((2, -2), (1, -1))
    b = HalfOpenCone.orthant(2).with_weak((1, -1))
    assert a == b


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        HalfOpenCone(dim=2, weak=[(1, 0, 0)])
    with pytest.raises(DimensionMismatchError):
        HalfOpenCone.orthant(2).intersect(HalfOpenCone.orthant(3))


def test_closed_cone_from_constraints():
    halfplane = Cone.from_constraints(2, [(1, 0)])
    assert halfplane.dimension == 2
    assert not halfplane.is_pointed
    assert halfplane.contains((3, -7))
    assert not halfplane.contains((-1, 0))
