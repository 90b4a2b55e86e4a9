"""Lattice polytopes (Newton polytopes) and the pieces of their normal fans."""

import logging
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import List, Sequence, Tuple

import cdd
from attrs import define, field

from topzeta.errors import DimensionMismatchError
from topzeta.polyhedra.cones import (
    Cone,
    HalfOpenCone,
    _h_matrix,
    _split_generators,
    _v_matrix,
)
from topzeta.polyhedra.linalg import IntVector, Rational, dot, int_det, rank
from topzeta.polyhedra.triangulation import triangulate

__all__ = ["Polytope", "normal_fan_pieces"]

logger = logging.getLogger(__name__)


def _canonical_points(points) -> Tuple[IntVector, ...]:
    return tuple(sorted(set(tuple(int(x) for x in p) for p in points)))


@define(frozen=True, slots=False, kw_only=True)
class Polytope:
    """``conv(points)`` for a nonempty finite set of integer points."""

    dim: int
    points: Tuple[IntVector, ...] = field(converter=_canonical_points)

    def __attrs_post_init__(self):
        if not self.points:
            raise ValueError("A polytope needs at least one point.")
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatchError(
                    f"Point {p} does not live in dimension {self.dim}."
                )

    @cached_property
    def vertices(self) -> Tuple[IntVector, ...]:
        if len(self.points) == 1 or self.dim == 0:
            return self.points[:1]
        hull = cdd.Polyhedron(_v_matrix(self.dim, self.points, [])).get_inequalities()
        rows, linear = [], []
        for i in range(hull.row_size):
            (linear if i in hull.lin_set else rows).append(list(hull[i]))
        mat = _h_matrix(self.dim, rows, linear)
        vertices, _, _ = _split_generators(cdd.Polyhedron(mat).get_generators())
        return _canonical_points(vertices)

    @cached_property
    def dimension(self) -> int:
        base = self.points[0]
        return rank(
            [tuple(a - b for a, b in zip(p, base)) for p in self.points[1:]], self.dim
        )

    def face(self, omega: Sequence[Rational]) -> "Polytope":
        """The face on which ``⟨·,ω⟩`` is minimal."""
        values = [dot(p, omega) for p in self.points]
        low = min(values)
        return Polytope(
            dim=self.dim, points=[p for p, v in zip(self.points, values) if v == low]
        )

    def __add__(self, other: "Polytope") -> "Polytope":
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"Cannot add polytopes of dimensions {self.dim} and {other.dim}."
            )
        return Polytope(
            dim=self.dim,
            points=[
                tuple(a + b for a, b in zip(p, q))
                for p in self.vertices
                for q in other.vertices
            ],
        )

    def scaled(self, factor: int) -> "Polytope":
        return Polytope(
            dim=self.dim, points=[tuple(factor * x for x in p) for p in self.vertices]
        )

    @cached_property
    def volume(self) -> Fraction:
        """Euclidean volume (zero unless full-dimensional)."""
        if self.dimension < self.dim:
            return Fraction(0)
        if self.dim == 0:
            return Fraction(1)
        lifted = Cone.from_generators(self.dim + 1, [(1,) + p for p in self.vertices])
        total = sum(abs(int_det(sigma.rays)) for sigma in triangulate(lifted))
        return Fraction(total, factorial(self.dim))

    @property
    def normalized_volume(self) -> int:
        """``n!·Vol``, an integer for lattice polytopes."""
        return int(self.volume * factorial(self.dim))


def normal_fan_pieces(
    P: Polytope, C0: HalfOpenCone
) -> List[Tuple[Polytope, HalfOpenCone]]:
    """All ``(τ, C0 ∩ N_τ(P))`` with nonempty intersection.

    Points of ``P`` are visited in order; the piece of a face is recorded under its first
    point ``i``: earlier points are strictly worse (``⟨pⱼ − pᵢ, ω⟩ > 0``), later points are
    either tied (an equation) or strictly worse. Branches with empty cones are pruned.
    """
    if C0.dim != P.dim:
        raise DimensionMismatchError(
            f"Polytope in dimension {P.dim} and cone in dimension {C0.dim} do not match."
        )
    if C0.is_empty:
        return []

    points = P.points
    if len(points) == 1:
        return [(P, C0)]

    out: List[Tuple[Polytope, HalfOpenCone]] = []
    for i, base in enumerate(points):
        diffs = [tuple(a - b for a, b in zip(p, base)) for p in points]
        cone = C0.with_strict(*diffs[:i])
        if cone.is_empty:
            continue

        def branch(cone: HalfOpenCone, j: int, tied: List[IntVector]) -> None:
            if j == len(points):
                out.append((Polytope(dim=P.dim, points=[base] + tied), cone))
                return
            if any(diffs[j]):
                equal = cone.with_equation(diffs[j])
                if not equal.is_empty:
                    branch(equal, j + 1, tied + [points[j]])
                worse = cone.with_strict(diffs[j])
                if not worse.is_empty:
                    branch(worse, j + 1, tied)
            else:
                branch(cone, j + 1, tied + [points[j]])

        branch(cone, i + 1, [])

    logger.debug(
        "normal fan of %d points meets the cone in %d pieces", len(points), len(out)
    )
    return out
