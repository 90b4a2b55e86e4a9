"""Closed rational cones, half-open cones and their polyhedral models.

All conversions between constraint and generator descriptions go through ``pycddlib`` in exact
(``fraction``) arithmetic. A half-open cone is never triangulated directly: every query is
answered through its polyhedral model, in which each strict constraint ``⟨χ,ω⟩ > 0`` is replaced
by ``⟨χ,ω⟩ ≥ 1``. The model has the same lattice points as the cone and is stable under
multiplication by positive integers.
"""

from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import cdd
from attrs import define, field

from topzeta.errors import DimensionMismatchError, EmptyConeError
from topzeta.helpers.records import named_record
from topzeta.polyhedra.linalg import IntVector, Rational, dot, primitive, rank

__all__ = [
    "Cone",
    "HalfOpenCone",
    "PolyhedralModel",
    "model_of",
    "hoc_intersect",
    "hoc_is_empty",
    "hoc_closure",
    "dual_contains",
]

RationalVector = Tuple[Fraction, ...]
ModelGenerators = Tuple[
    Tuple[RationalVector, ...], Tuple[IntVector, ...], Tuple[IntVector, ...]
]


def _to_vectors(rows: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _canonical_halfspaces(rows: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
    out = set()
    for row in rows:
        if any(row):
            out.add(primitive(row))
    return tuple(sorted(out))


def _canonical_strict(rows: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
    # a zero strict row (0 > 0) empties the cone and must survive canonicalization
    out = set()
    for row in rows:
        out.add(primitive(row) if any(row) else tuple(int(x) for x in row))
    return tuple(sorted(out))


def _canonical_equations(rows: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
    out = set()
    for row in rows:
        if any(row):
            v = primitive(row)
            if next(x for x in v if x != 0) < 0:
                v = tuple(-x for x in v)
            out.add(v)
    return tuple(sorted(out))


def _h_matrix(
    dim: int,
    rows: Sequence[Sequence[Rational]],
    linear_rows: Sequence[Sequence[Rational]] = (),
) -> "cdd.Matrix":
    """cdd H-representation; every row is ``[b, a...]`` meaning ``b + ⟨a,x⟩ ≥ 0`` (or ``= 0``)."""
    # cdd cannot build a matrix without rows, so the tautology 1 >= 0 is always present
    mat = cdd.Matrix([[1] + [0] * dim] + [list(r) for r in rows], number_type="fraction")
    mat.rep_type = cdd.RepType.INEQUALITY
    if linear_rows:
        mat.extend([list(r) for r in linear_rows], linear=True)
    return mat


def _v_matrix(
    dim: int, points: Sequence[Sequence[Rational]], rays: Sequence[Sequence[Rational]]
) -> "cdd.Matrix":
    rows = [[1] + list(p) for p in points] + [[0] + list(r) for r in rays]
    mat = cdd.Matrix(rows, number_type="fraction")
    mat.rep_type = cdd.RepType.GENERATOR
    return mat


def _split_generators(
    gens: "cdd.Matrix",
) -> Tuple[List[Tuple[Fraction, ...]], List[IntVector], List[IntVector]]:
    """Vertices, rays and lineality vectors of a cdd V-representation."""
    vertices, rays, lineality = [], [], []
    lin_set = gens.lin_set
    for i in range(gens.row_size):
        row = [Fraction(x) for x in gens[i]]
        t, v = row[0], row[1:]
        if i in lin_set:
            if any(v):
                lineality.append(primitive(v))
        elif t != 0:
            vertices.append(tuple(x / t for x in v))
        elif any(v):
            rays.append(primitive(v))
    return vertices, rays, lineality


@define(frozen=True, slots=False, kw_only=True)
class Cone:
    """A closed rational polyhedral cone, kept as a generator description.

    Constraints are derived on demand; build from constraints with :py:meth:`from_constraints`.
    """

    dim: int
    rays: Tuple[IntVector, ...] = field(converter=_to_vectors, default=())
    """Primitive integer generators. Extreme rays unless built with ``minimize=False``."""
    lineality: Tuple[IntVector, ...] = field(converter=_to_vectors, default=())
    """A basis of the lineality space."""

    @classmethod
    def from_constraints(
        cls,
        dim: int,
        inequalities: Sequence[Sequence[int]] = (),
        equations: Sequence[Sequence[int]] = (),
    ) -> "Cone":
        if dim == 0:
            return cls(dim=0)
        mat = _h_matrix(
            dim, [[0] + list(r) for r in inequalities], [[0] + list(r) for r in equations]
        )
        _, rays, lineality = _split_generators(cdd.Polyhedron(mat).get_generators())
        return cls(dim=dim, rays=sorted(set(rays)), lineality=lineality)

    @classmethod
    def from_generators(
        cls,
        dim: int,
        rays: Sequence[Sequence[int]],
        lineality: Sequence[Sequence[int]] = (),
        minimize: bool = True,
    ) -> "Cone":
        if not minimize:
            return cls(
                dim=dim,
                rays=[primitive(r) for r in rays if any(r)],
                lineality=[primitive(r) for r in lineality if any(r)],
            )
        cone = cls(dim=dim, rays=rays, lineality=lineality)
        return cls.from_constraints(dim, cone.inequalities, cone.equations)

    @cached_property
    def _h_representation(self) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
        if self.dim == 0:
            return (), ()
        opposite = [tuple(-x for x in l) for l in self.lineality]
        all_rays = list(self.rays) + list(self.lineality) + opposite
        mat = _v_matrix(self.dim, [[0] * self.dim], all_rays)
        ineqs = cdd.Polyhedron(mat).get_inequalities()
        inequalities, equations = [], []
        for i in range(ineqs.row_size):
            row = [Fraction(x) for x in ineqs[i]]
            a = row[1:]
            if not any(a):
                continue
            if i in ineqs.lin_set:
                equations.append(primitive(a))
            else:
                inequalities.append(primitive(a))
        return _canonical_halfspaces(inequalities), _canonical_equations(equations)

    @property
    def inequalities(self) -> Tuple[IntVector, ...]:
        """Normals φ with ``⟨φ,ω⟩ ≥ 0`` on the cone (facet description)."""
        return self._h_representation[0]

    @property
    def equations(self) -> Tuple[IntVector, ...]:
        return self._h_representation[1]

    @cached_property
    def dimension(self) -> int:
        return rank(list(self.rays) + list(self.lineality), self.dim)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def contains(self, point: Sequence[Rational]) -> bool:
        return all(dot(phi, point) >= 0 for phi in self.inequalities) and all(
            dot(psi, point) == 0 for psi in self.equations
        )

    def dual_contains(self, alpha: Sequence[Rational]) -> bool:
        """Whether ``⟨α,ω⟩ ≥ 0`` holds on the whole cone."""
        return all(dot(alpha, r) >= 0 for r in self.rays) and all(
            dot(alpha, l) == 0 for l in self.lineality
        )


@define(frozen=True, slots=False, kw_only=True)
class PolyhedralModel:
    """The closed polyhedron ``{⟨φ,ω⟩ ≥ 0, ⟨χ,ω⟩ ≥ 1, ⟨ψ,ω⟩ = 0}`` of a half-open cone."""

    dim: int
    weak: Tuple[IntVector, ...] = field(converter=_to_vectors, default=())
    shifted: Tuple[IntVector, ...] = field(converter=_to_vectors, default=())
    """Normals χ of the constraints ``⟨χ,ω⟩ ≥ 1``."""
    equations: Tuple[IntVector, ...] = field(converter=_to_vectors, default=())

    @cached_property
    def generators(self) -> ModelGenerators:
        """``(vertices, rays, lineality)``; no vertices means the model is empty."""
        if self.dim == 0:
            # ℝ⁰ is the single point 0, which violates every shifted constraint
            vertices = () if self.shifted else ((),)
            return vertices, (), ()
        rows = [[0] + list(r) for r in self.weak] + [[-1] + list(r) for r in self.shifted]
        mat = _h_matrix(self.dim, rows, [[0] + list(r) for r in self.equations])
        vertices, rays, lineality = _split_generators(cdd.Polyhedron(mat).get_generators())
        return tuple(vertices), tuple(rays), tuple(lineality)

    @property
    def is_empty(self) -> bool:
        return not self.generators[0]

    def contains(self, point: Sequence[Rational]) -> bool:
        return (
            all(dot(phi, point) >= 0 for phi in self.weak)
            and all(dot(chi, point) >= 1 for chi in self.shifted)
            and all(dot(psi, point) == 0 for psi in self.equations)
        )


@named_record("half_open_cone")
@define(frozen=True, slots=False, kw_only=True)
class HalfOpenCone:
    """``{ω ∈ ℝⁿ : ⟨φ,ω⟩ ≥ 0, ⟨χ,ω⟩ > 0, ⟨ψ,ω⟩ = 0}`` with integer normals φ (weak),
    χ (strict) and ψ (equations).

    Cones of toric data are subsets of the nonnegative orthant; they are built from
    :py:meth:`orthant`, which lists the coordinate functionals among the weak constraints.
    """

    dim: int
    weak: Tuple[IntVector, ...] = field(converter=_canonical_halfspaces, default=())
    strict: Tuple[IntVector, ...] = field(converter=_canonical_strict, default=())
    equations: Tuple[IntVector, ...] = field(converter=_canonical_equations, default=())

    def __attrs_post_init__(self):
        for row in (*self.weak, *self.strict, *self.equations):
            if len(row) != self.dim:
                raise DimensionMismatchError(
                    f"Constraint {row} does not live in dimension {self.dim}."
                )

    @classmethod
    def orthant(cls, dim: int) -> "HalfOpenCone":
        return cls(dim=dim, weak=[_unit(dim, i) for i in range(dim)])

    @classmethod
    def strict_orthant(cls, dim: int) -> "HalfOpenCone":
        return cls(dim=dim, strict=[_unit(dim, i) for i in range(dim)])

    @classmethod
    def ambient(cls, dim: int) -> "HalfOpenCone":
        return cls(dim=dim)

    def with_constraints(
        self,
        weak: Sequence[Sequence[int]] = (),
        strict: Sequence[Sequence[int]] = (),
        equations: Sequence[Sequence[int]] = (),
    ) -> "HalfOpenCone":
        return HalfOpenCone(
            dim=self.dim,
            weak=self.weak + _to_vectors(weak),
            strict=self.strict + _to_vectors(strict),
            equations=self.equations + _to_vectors(equations),
        )

    def with_weak(self, *normals: Sequence[int]) -> "HalfOpenCone":
        return self.with_constraints(weak=normals)

    def with_strict(self, *normals: Sequence[int]) -> "HalfOpenCone":
        return self.with_constraints(strict=normals)

    def with_equation(self, *normals: Sequence[int]) -> "HalfOpenCone":
        return self.with_constraints(equations=normals)

    def intersect(self, other: "HalfOpenCone") -> "HalfOpenCone":
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"Cannot intersect cones of dimensions {self.dim} and {other.dim}."
            )
        return self.with_constraints(other.weak, other.strict, other.equations)

    def product(self, other: "HalfOpenCone") -> "HalfOpenCone":
        """The cartesian product ``self × other`` in ``ℝ^(n+m)``."""
        pad_left = lambda v: tuple(v) + (0,) * other.dim
        pad_right = lambda v: (0,) * self.dim + tuple(v)
        return HalfOpenCone(
            dim=self.dim + other.dim,
            weak=[pad_left(v) for v in self.weak] + [pad_right(v) for v in other.weak],
            strict=[pad_left(v) for v in self.strict]
            + [pad_right(v) for v in other.strict],
            equations=[pad_left(v) for v in self.equations]
            + [pad_right(v) for v in other.equations],
        )

    @cached_property
    def model(self) -> PolyhedralModel:
        return PolyhedralModel(
            dim=self.dim, weak=self.weak, shifted=self.strict, equations=self.equations
        )

    @cached_property
    def is_empty(self) -> bool:
        return self.model.is_empty

    @cached_property
    def closure(self) -> Cone:
        """The smallest closed cone containing the half-open cone."""
        if self.is_empty:
            raise EmptyConeError("The closure of an empty half-open cone is not defined.")
        vertices, rays, lineality = self.model.generators
        generators = [primitive(v) for v in vertices if any(v)] + list(rays)
        return Cone.from_generators(self.dim, generators, lineality)

    @property
    def dimension(self) -> int:
        """Dimension of the closure; ``-1`` for the empty cone."""
        if self.is_empty:
            return -1
        return self.closure.dimension

    def contains(self, point: Sequence[Rational]) -> bool:
        return (
            all(dot(phi, point) >= 0 for phi in self.weak)
            and all(dot(chi, point) > 0 for chi in self.strict)
            and all(dot(psi, point) == 0 for psi in self.equations)
        )

    def dual_contains(self, alpha: Sequence[Rational]) -> bool:
        if self.is_empty:
            raise EmptyConeError("The dual of an empty half-open cone is not defined here.")
        return self.closure.dual_contains(alpha)

    def interior_point(self) -> IntVector:
        """An integer point of the cone, in the relative interior of its model."""
        if self.is_empty:
            raise EmptyConeError("An empty half-open cone has no points.")
        vertices, rays, _ = self.model.generators
        point = [
            sum((v[i] for v in vertices), Fraction(0)) / len(vertices)
            + sum(r[i] for r in rays)
            for i in range(self.dim)
        ]
        denom = 1
        for x in point:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        return tuple(int(x * denom) for x in point)

    def is_closed(self) -> bool:
        return not self.strict

    def __str__(self) -> str:
        parts = [f"<{v}> >= 0" for v in self.weak]
        parts += [f"<{v}> > 0" for v in self.strict]
        parts += [f"<{v}> = 0" for v in self.equations]
        return f"HalfOpenCone(dim={self.dim}; " + ", ".join(parts) + ")"


def _unit(dim: int, i: int) -> IntVector:
    return tuple(int(j == i) for j in range(dim))


def model_of(C0: HalfOpenCone) -> PolyhedralModel:
    return C0.model


def hoc_intersect(C0: HalfOpenCone, D0: HalfOpenCone) -> HalfOpenCone:
    return C0.intersect(D0)


def hoc_is_empty(C0: HalfOpenCone) -> bool:
    return C0.is_empty


def hoc_closure(C0: HalfOpenCone) -> Cone:
    return C0.closure


def dual_contains(C0: HalfOpenCone, alpha: Sequence[Rational]) -> bool:
    return C0.dual_contains(alpha)
