import hashlib
from typing import Sequence, Tuple

from attrs import define, field

from topzeta.errors import MoreEquationsThanVariablesError, ZeroPolynomialError
from topzeta.helpers.records import named_record
from topzeta.ideals import PolyIdeal, jacobian_minors
from topzeta.laurent import LaurentPolynomial, clear_denominators
from topzeta.polyhedra.linalg import IntMatrix, smith_normal_form

__all__ = [
    "TorusVariety",
    "TorusSplit",
    "torus_split",
    "canonical_system",
    "system_key",
    "smooth_on_torus",
]


def _drop_zero(polys) -> Tuple[LaurentPolynomial, ...]:
    return tuple(f for f in polys if not f.is_zero)


@named_record("torus_variety")
@define(frozen=True, kw_only=True)
class TorusVariety:
    """The closed subvariety ``{f₁ = … = f_r = 0}`` of the torus ``Tⁿ``."""

    nvars: int
    polys: Tuple[LaurentPolynomial, ...] = field(converter=_drop_zero, default=())

    @property
    def obviously_empty(self) -> bool:
        """A single term never vanishes on the torus."""
        return any(f.is_term for f in self.polys)

    @property
    def total_support(self) -> int:
        return sum(len(f.terms) for f in self.polys)

    def key(self) -> str:
        return system_key(self.polys, self.nvars)


@define(frozen=True, kw_only=True)
class TorusSplit:
    matrix: IntMatrix = field(converter=lambda m: tuple(tuple(r) for r in m))
    """Unimodular ``A``; the change of variables is ``X^v ↦ X^(vA)``."""
    polys: Tuple[LaurentPolynomial, ...]
    """The rescaled polynomials, involving only the first ``dimension`` variables."""
    dimension: int
    torus_rank: int

    @property
    def variety(self) -> TorusVariety:
        return TorusVariety(nvars=self.dimension, polys=self.polys)


def torus_split(polys: Sequence[LaurentPolynomial], nvars: int) -> TorusSplit:
    """Exhibit ``V(polys) ≅ U × T^(n-d)`` with ``U`` defined by polynomials in ``d`` variables.

    Each ``fᵢ`` is divided by one of its terms; ``d`` is the rank of the lattice spanned by the
    resulting supports and ``A`` comes from its Smith normal form.
    """
    if any(f.is_zero for f in polys):
        raise ZeroPolynomialError("Cannot split the torus along a zero polynomial.")

    shifted = [f.shift(tuple(-x for x in f.support[0])) for f in polys]
    rows = [e for g in shifted for e in g.support if any(e)]
    if not rows:
        constants = [g.restrict(0) for g in shifted]
        return TorusSplit(
            matrix=[[int(i == j) for j in range(nvars)] for i in range(nvars)],
            polys=tuple(constants),
            dimension=0,
            torus_rank=nvars,
        )

    _, D, A = smith_normal_form(rows, nvars)
    d = sum(1 for i in range(min(len(D), nvars)) if D[i][i] != 0)
    reduced = tuple(g.substitute_exponents(A).restrict(d) for g in shifted)
    return TorusSplit(matrix=A, polys=reduced, dimension=d, torus_rank=nvars - d)


def canonical_system(
    polys: Sequence[LaurentPolynomial],
) -> Tuple[LaurentPolynomial, ...]:
    """Representatives up to units of the torus: monomial-free and monic, sorted, deduplicated."""
    out = set()
    for f in polys:
        if f.is_zero:
            continue
        gamma = tuple(-min(e[i] for e in f.support) for i in range(f.nvars))
        out.add(f.shift(gamma).normalized())
    return tuple(sorted(out, key=lambda f: f.terms))


def system_key(polys: Sequence[LaurentPolynomial], nvars: int) -> str:
    text = repr((nvars, [f.terms for f in canonical_system(polys)]))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def smooth_on_torus(polys: Sequence[LaurentPolynomial], nvars: int) -> bool:
    """Whether the Jacobian of ``polys`` has full rank ``len(polys)`` at each common torus zero.

    The system is first torus-split (the rank condition is invariant), then
    ``X₁⋯X_d ∈ √(⟨g⟩ + minors)`` is decided by the Rabinowitsch trick. With more equations than
    variables only emptiness can make the condition hold, and the same goes for systems
    containing the zero polynomial.
    """
    degenerate = any(f.is_zero for f in polys)
    polys = [f for f in polys if not f.is_zero]
    if any(f.is_term for f in polys):
        return True
    if not polys:
        return not degenerate

    split = torus_split(polys, nvars)
    if any(g.is_constant for g in split.polys):
        return True
    d = split.dimension
    cleared = [clear_denominators(g)[0] for g in split.polys]
    coordinates = LaurentPolynomial.monomial((1,) * d)
    try:
        minors = [] if degenerate else jacobian_minors(cleared, d)
    except MoreEquationsThanVariablesError:
        minors = []
    ideal = PolyIdeal(nvars=d, generators=cleared + [m for m in minors if not m.is_zero])
    return ideal.radical_contains(coordinates)
