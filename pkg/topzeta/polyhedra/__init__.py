from topzeta.polyhedra.cones import (
    Cone,
    HalfOpenCone,
    PolyhedralModel,
    dual_contains,
    hoc_closure,
    hoc_intersect,
    hoc_is_empty,
    model_of,
)
from topzeta.polyhedra.fans import Polytope, normal_fan_pieces
from topzeta.polyhedra.genfun import (
    GeneratingFunction,
    GeneratingTerm,
    enumerate_lattice_points,
    generating_function,
    substitute_monomial,
)
from topzeta.polyhedra.linalg import smith_normal_form
from topzeta.polyhedra.triangulation import (
    SimplicialCone,
    parallelepiped_points,
    triangulate,
)

__all__ = [
    "Cone",
    "HalfOpenCone",
    "PolyhedralModel",
    "Polytope",
    "SimplicialCone",
    "GeneratingFunction",
    "GeneratingTerm",
    "model_of",
    "hoc_intersect",
    "hoc_is_empty",
    "hoc_closure",
    "dual_contains",
    "normal_fan_pieces",
    "triangulate",
    "parallelepiped_points",
    "generating_function",
    "substitute_monomial",
    "enumerate_lattice_points",
    "smith_normal_form",
]
