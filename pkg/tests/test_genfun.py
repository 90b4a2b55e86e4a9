import pytest

from topzeta.errors import BadFirstColumnError
from topzeta.polyhedra import (
    HalfOpenCone,
    enumerate_lattice_points,
    generating_function,
    substitute_monomial,
)
from topzeta.polyhedra.triangulation import lexicographic_order, reverse_lexicographic_order


@pytest.mark.parametrize(
    "cone",
    [
        HalfOpenCone.orthant(2),
        HalfOpenCone.strict_orthant(2),
        HalfOpenCone.orthant(2).with_strict((1, -1)),
        HalfOpenCone.orthant(2).with_weak((2, -1)),
        HalfOpenCone.orthant(3).with_weak((1, 1, -1)),
        HalfOpenCone.orthant(3).with_strict((0, 1, 0)).with_equation((1, -1, 0)),
    ],
)
@pytest.mark.parametrize("order", [lexicographic_order, reverse_lexicographic_order])
def test_series_counts_lattice_points(cone, order):
    bound = 6
    assert generating_function(cone, order).series(bound) == enumerate_lattice_points(
        cone, bound
    )


def test_empty_cone_has_no_terms():
    cone = HalfOpenCone.strict_orthant(1).with_weak((-1,))
    assert generating_function(cone).terms == ()


def test_substitution():
    G = substitute_monomial(generating_function(HalfOpenCone.orthant(1)), [[1, 1]])
    assert G.nvars == 2
    assert G.series(4) == {(0, 0): 1, (1, 1): 1, (2, 2): 1}


def test_substitution_checks_first_column():
    G = generating_function(HalfOpenCone.orthant(1))
    with pytest.raises(BadFirstColumnError):
        substitute_monomial(G, [[2, 0]])
    with pytest.raises(BadFirstColumnError):
        substitute_monomial(G, [[1, -1]])
