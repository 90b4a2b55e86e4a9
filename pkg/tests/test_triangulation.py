import pytest

from topzeta.errors import DimensionMismatchError
from topzeta.polyhedra import Cone, SimplicialCone, triangulate
from topzeta.polyhedra.triangulation import lexicographic_order, reverse_lexicographic_order

ORDERS = [lexicographic_order, reverse_lexicographic_order]


def test_simplicial_cone_is_kept():
    C = Cone.from_generators(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    (sigma,) = triangulate(C)
    assert sigma.multiplicity == 1
    assert set(sigma.rays) == set(C.rays)


@pytest.mark.parametrize("order", ORDERS)
def test_square_cone(order):
    C = Cone.from_generators(3, [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)])
    simplices = triangulate(C, order)
    assert len(simplices) == 2
    assert all(len(sigma.rays) == 3 for sigma in simplices)
    assert sum(sigma.multiplicity for sigma in simplices) == 2


@pytest.mark.parametrize("order", ORDERS)
def test_triangulation_volume_is_order_independent(order):
    # a pentagon over the hyperplane x0 = 1
    rays = [(1, 0, 0), (1, 2, 0), (1, 3, 2), (1, 1, 3), (1, 0, 2)]
    simplices = triangulate(Cone.from_generators(3, rays), order)
    assert sum(sigma.multiplicity for sigma in simplices) == 13


def test_rays_are_placed_lexicographically_by_default():
    rays = [(1, 0, 0), (1, 2, 0), (1, 3, 2), (1, 1, 3), (1, 0, 2)]
    C = Cone.from_generators(3, rays)
    assert triangulate(C) == triangulate(C, lexicographic_order)


def test_parallelepiped_points():
    sigma = SimplicialCone(dim=2, rays=[(1, 0), (1, 2)])
    assert sigma.multiplicity == 2
    assert sigma.parallelepiped_points() == [(0, 0), (1, 1)]


def test_lineality_is_split_by_sign():
    halfplane = Cone.from_constraints(2, [(1, 0)])
    simplices = triangulate(halfplane)
    assert len(simplices) == 2
    assert all(len(sigma.rays) == 2 for sigma in simplices)


def test_dependent_rays_are_rejected():
    with pytest.raises(DimensionMismatchError):
        SimplicialCone(dim=2, rays=[(1, 0), (2, 0)])
