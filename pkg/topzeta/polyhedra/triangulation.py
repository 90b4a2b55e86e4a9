from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from attrs import define, field

from topzeta.errors import DimensionMismatchError
from topzeta.polyhedra.cones import Cone
from topzeta.polyhedra.linalg import (
    IntVector,
    dot,
    lattice_index,
    primitive,
    rank,
    smith_normal_form,
    solve_unique,
)

__all__ = [
    "SimplicialCone",
    "triangulate",
    "parallelepiped_points",
    "lexicographic_order",
    "reverse_lexicographic_order",
]

RayOrder = Callable[[Sequence[IntVector]], List[IntVector]]


def _to_rays(rows) -> Tuple[IntVector, ...]:
    return tuple(tuple(int(x) for x in r) for r in rows)


@define(frozen=True, slots=False, kw_only=True)
class SimplicialCone:
    dim: int
    rays: Tuple[IntVector, ...] = field(converter=_to_rays)
    """Linearly independent primitive integer rays."""

    def __attrs_post_init__(self):
        if rank(self.rays, self.dim) != len(self.rays):
            raise DimensionMismatchError(f"Rays {self.rays} are not linearly independent.")

    @property
    def dimension(self) -> int:
        return len(self.rays)

    @cached_property
    def multiplicity(self) -> int:
        """Number of lattice points in the half-open fundamental parallelepiped."""
        if not self.rays:
            return 1
        return lattice_index(self.rays, self.dim)

    def parallelepiped_points(self) -> List[IntVector]:
        return parallelepiped_points(self)

    def coefficients(self, point: Sequence[int]) -> Tuple[Fraction, ...]:
        """Coordinates λ with ``point = Σ λᵢ ρᵢ`` (``point`` must lie in the span)."""
        gram = [[dot(r, s) for s in self.rays] for r in self.rays]
        return solve_unique(gram, [dot(r, point) for r in self.rays])

    def face(self, indices: Sequence[int]) -> "SimplicialCone":
        return SimplicialCone(dim=self.dim, rays=[self.rays[i] for i in indices])


def parallelepiped_points(sigma: SimplicialCone) -> List[IntVector]:
    """Lattice points of ``{Σ λᵢρᵢ : 0 ≤ λᵢ < 1}``.

    With ``C·R·A = D`` the Smith form of the ray matrix ``R``, a point ``λR`` is integral iff
    ``μ = λC⁻¹`` has ``μₖdₖ ∈ ℤ``; running ``μ`` over these residues and reducing ``λ = μC``
    modulo 1 enumerates every point once.
    """
    e = len(sigma.rays)
    if e == 0:
        return [(0,) * sigma.dim]
    C, D, _ = smith_normal_form(sigma.rays, sigma.dim)
    diag = [D[k][k] for k in range(e)]

    points = []
    for numerators in product(*(range(d) for d in diag)):
        mu = [Fraction(a, d) for a, d in zip(numerators, diag)]
        lam = [sum(mu[k] * C[k][i] for k in range(e)) for i in range(e)]
        lam = [x - (x.numerator // x.denominator) for x in lam]
        point = tuple(
            int(sum(lam[i] * sigma.rays[i][j] for i in range(e))) for j in range(sigma.dim)
        )
        points.append(point)
    return sorted(points)


def reverse_lexicographic_order(rays: Sequence[IntVector]) -> List[IntVector]:
    return sorted(rays, reverse=True)


def lexicographic_order(rays: Sequence[IntVector]) -> List[IntVector]:
    return sorted(rays)


def _boundary_normal(
    simplex: Tuple[IntVector, ...], omitted: int
) -> Tuple[Fraction, ...]:
    """Coordinates ``c`` of the normal ``η = Σ cₖρₖ`` (inside the span of the simplex) with
    ``⟨η,ρ⟩ = 0`` on the facet opposite to ``simplex[omitted]`` and ``⟨η, simplex[omitted]⟩ = 1``.
    """
    gram = [[dot(r, s) for s in simplex] for r in simplex]
    rhs = [int(k == omitted) for k in range(len(simplex))]
    return solve_unique(gram, rhs)


def _place(rays: Sequence[IntVector], dim: int) -> List[Tuple[IntVector, ...]]:
    simplices: List[Tuple[IntVector, ...]] = []
    placed: List[IntVector] = []

    for p in rays:
        if not placed:
            simplices = [(p,)]
            placed.append(p)
            continue

        if rank(placed + [p], dim) > rank(placed, dim):
            simplices = [s + (p,) for s in simplices]
            placed.append(p)
            continue

        facet_count: Dict[FrozenSet[IntVector], int] = {}
        for s in simplices:
            for k in range(len(s)):
                facet = frozenset(s[:k] + s[k + 1 :])
                facet_count[facet] = facet_count.get(facet, 0) + 1

        added = []
        for s in simplices:
            for k in range(len(s)):
                facet = s[:k] + s[k + 1 :]
                if facet_count[frozenset(facet)] != 1:
                    continue
                coeffs = _boundary_normal(s, k)
                side = sum(c * dot(r, p) for c, r in zip(coeffs, s))
                if side < 0:
                    added.append(tuple(sorted(facet, reverse=True)) + (p,))
        if added:
            placed.append(p)
            simplices += added

    return simplices


def triangulate(C: Cone, order: Optional[RayOrder] = None) -> List[SimplicialCone]:
    """Placing triangulation of a closed cone.

    Rays are placed in the given order (by default ascending lexicographic order). A ray
    outside the span of the placed rays is joined with every simplex; otherwise it is joined
    with each boundary facet it lies strictly beyond. Cones with lineality are split into the
    ``2^k`` sign patterns of a lineality basis over a triangulation of the pointed part.
    """
    if order is None:
        order = lexicographic_order

    if C.lineality:
        complement = Cone.from_constraints(
            C.dim, C.inequalities, list(C.equations) + list(C.lineality)
        )
        pointed = triangulate(complement, order) if complement.rays else []
        base = [sigma.rays for sigma in pointed] or [()]
        out = []
        for signs in product((1, -1), repeat=len(C.lineality)):
            extra = tuple(tuple(s * x for x in l) for s, l in zip(signs, C.lineality))
            for rays in base:
                out.append(SimplicialCone(dim=C.dim, rays=rays + extra))
        return out

    rays = order([primitive(r) for r in C.rays])
    if not rays:
        return [SimplicialCone(dim=C.dim, rays=())]
    return [SimplicialCone(dim=C.dim, rays=s) for s in _place(rays, C.dim)]
