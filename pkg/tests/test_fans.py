import itertools
from fractions import Fraction

import pytest

from topzeta.errors import DimensionMismatchError
from topzeta.polyhedra import HalfOpenCone, Polytope, normal_fan_pieces

TRIANGLE = Polytope(dim=2, points=[(0, 0), (1, 0), (0, 1)])


def test_vertices_and_volume():
    square = Polytope(dim=2, points=[(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert square.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert square.volume == 4
    assert TRIANGLE.volume == Fraction(1, 2)
    assert TRIANGLE.normalized_volume == 1


def test_lower_dimensional_polytope_has_no_volume():
    segment = Polytope(dim=2, points=[(0, 0), (1, 1)])
    assert segment.dimension == 1
    assert segment.volume == 0


def test_minkowski_sum():
    P = TRIANGLE + TRIANGLE
    assert P.vertices == ((0, 0), (0, 2), (2, 0))
    assert P.volume == 2
    assert TRIANGLE.scaled(2).vertices == P.vertices


@pytest.mark.parametrize(
    "omega,points",
    [
        ((1, 1), ((0, 0),)),
        ((0, 1), ((0, 0), (1, 0))),
        ((-1, -1), ((0, 1), (1, 0))),
    ],
)
def test_face(omega, points):
    assert TRIANGLE.face(omega).points == points


def test_normal_fan_partitions_the_cone():
    cone = HalfOpenCone.orthant(2)
    pieces = normal_fan_pieces(TRIANGLE, cone)
    assert len(pieces) == 4
    for point in itertools.product(range(4), repeat=2):
        assert sum(piece.contains(point) for _, piece in pieces) == 1
    for face, piece in pieces:
        omega = piece.interior_point()
        assert face == TRIANGLE.face(omega)


def test_normal_fan_of_a_point():
    P = Polytope(dim=2, points=[(1, 1)])
    assert normal_fan_pieces(P, HalfOpenCone.orthant(2)) == [(P, HalfOpenCone.orthant(2))]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        normal_fan_pieces(TRIANGLE, HalfOpenCone.orthant(3))
