"""Lattice-point generating functions of half-open cones and monomial substitutions."""

import itertools
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from attrs import define, field

from topzeta.errors import BadFirstColumnError, DimensionMismatchError
from topzeta.polyhedra.cones import HalfOpenCone
from topzeta.polyhedra.linalg import IntVector, dot, vec_mat
from topzeta.polyhedra.triangulation import RayOrder, SimplicialCone, triangulate

__all__ = [
    "GeneratingTerm",
    "GeneratingFunction",
    "generating_function",
    "substitute_monomial",
    "enumerate_lattice_points",
]


def _to_vectors(rows) -> Tuple[IntVector, ...]:
    return tuple(tuple(int(x) for x in r) for r in rows)


@define(frozen=True, kw_only=True)
class GeneratingTerm:
    """``coefficient · (Σ_β λ^β) / Π_ρ (1 − λ^ρ)``."""

    coefficient: int = 1
    numerator: Tuple[IntVector, ...] = field(converter=_to_vectors)
    denominator: Tuple[IntVector, ...] = field(converter=_to_vectors)

    def __attrs_post_init__(self):
        for rho in self.denominator:
            if not any(rho) or min(rho) < 0:
                raise ValueError(f"Denominator ray {rho} must be nonzero and nonnegative.")


@define(frozen=True, kw_only=True)
class GeneratingFunction:
    nvars: int
    terms: Tuple[GeneratingTerm, ...] = field(converter=tuple, default=())

    def series(self, bound: int) -> Dict[IntVector, int]:
        """Coefficients of the power series expansion up to total degree ``bound``."""
        out: Dict[IntVector, int] = defaultdict(int)
        for term in self.terms:
            for beta in term.numerator:
                for point in _expand(beta, term.denominator, bound):
                    out[point] += term.coefficient
        return {k: v for k, v in out.items() if v != 0}

    def substitute(self, A: Sequence[Sequence[int]]) -> "GeneratingFunction":
        return substitute_monomial(self, A)

    def __add__(self, other: "GeneratingFunction") -> "GeneratingFunction":
        if other.nvars != self.nvars:
            raise DimensionMismatchError(
                f"Cannot add generating functions in {self.nvars} and {other.nvars} variables."
            )
        return GeneratingFunction(nvars=self.nvars, terms=self.terms + other.terms)


def _expand(
    beta: IntVector, rays: Sequence[IntVector], bound: int
) -> Iterator[IntVector]:
    if sum(beta) > bound:
        return
    if not rays:
        yield beta
        return
    rho, rest = rays[0], rays[1:]
    step = sum(rho)
    point = beta
    while sum(point) <= bound:
        yield from _expand(point, rest, bound)
        point = tuple(a + b for a, b in zip(point, rho))
        if step == 0:
            break


def _open_parallelepiped(sigma: SimplicialCone) -> List[IntVector]:
    """Lattice points of ``{Σ λᵢρᵢ : 0 < λᵢ ≤ 1}``."""
    out = []
    for point in sigma.parallelepiped_points():
        lam = sigma.coefficients(point) if sigma.rays else ()
        shifted = list(point)
        for coeff, rho in zip(lam, sigma.rays):
            if coeff == 0:
                shifted = [a + b for a, b in zip(shifted, rho)]
        out.append(tuple(shifted))
    return sorted(out)


def generating_function(
    C0: HalfOpenCone, order: Optional[RayOrder] = None
) -> GeneratingFunction:
    """Generating function of ``C0 ∩ ℤⁿ``.

    The relative interiors of all faces of a triangulation of the closure partition the
    closure. A face lies inside ``C0`` iff every strict constraint is positive on one of its
    rays, and the lattice points of an open simplicial cone are the translates of its open
    fundamental parallelepiped.
    """
    if C0.is_empty:
        return GeneratingFunction(nvars=C0.dim)

    faces = set()
    for sigma in triangulate(C0.closure, order):
        for k in range(len(sigma.rays) + 1):
            for subset in itertools.combinations(sorted(sigma.rays), k):
                faces.add(subset)

    terms = []
    for rays in sorted(faces):
        if not all(any(dot(chi, rho) > 0 for rho in rays) for chi in C0.strict):
            continue
        sigma = SimplicialCone(dim=C0.dim, rays=rays)
        terms.append(
            GeneratingTerm(numerator=_open_parallelepiped(sigma), denominator=sigma.rays)
        )
    return GeneratingFunction(nvars=C0.dim, terms=terms)


def substitute_monomial(
    G: GeneratingFunction, A: Sequence[Sequence[int]]
) -> GeneratingFunction:
    """Apply ``λ^v ↦ Y^(vA)`` to every numerator point and denominator ray."""
    if len(A) != G.nvars:
        raise DimensionMismatchError(
            f"Substitution matrix needs {G.nvars} rows, got {len(A)}."
        )
    if any(row[0] != 1 for row in A):
        raise BadFirstColumnError(
            "The first column of a substitution matrix must be all ones."
        )
    if any(x < 0 for row in A for x in row):
        raise BadFirstColumnError("Substitution matrices must have nonnegative entries.")

    ncols = len(A[0]) if A else 1
    terms = [
        GeneratingTerm(
            coefficient=term.coefficient,
            numerator=[vec_mat(beta, A) for beta in term.numerator],
            denominator=[vec_mat(rho, A) for rho in term.denominator],
        )
        for term in G.terms
    ]
    return GeneratingFunction(nvars=ncols, terms=terms)


def enumerate_lattice_points(C0: HalfOpenCone, bound: int) -> Dict[IntVector, int]:
    """Brute-force ``C0 ∩ ℕ0ⁿ`` up to total degree ``bound``, as a series."""
    out = {}
    for point in itertools.product(range(bound + 1), repeat=C0.dim):
        if sum(point) <= bound and C0.contains(point):
            out[point] = 1
    return out
