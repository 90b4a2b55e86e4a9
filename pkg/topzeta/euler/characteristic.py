"""Topological Euler characteristics of subvarieties of algebraic tori.

The pipeline tries, in order: trivial cases, splitting off a torus factor, ideal
simplification, counting points of zero-dimensional systems, Khovanskii's mixed-volume
formula for non-degenerate systems, and finally eliminating a variable that occurs linearly.
Whenever no method applies an :py:class:`~topzeta.errors.EulerFailure` is raised; a value is
never guessed.
"""

import itertools
import logging
from functools import reduce
from math import gcd
from operator import add
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from attrs import define
from sympy import Poly, Rational, symbols

from topzeta.errors import DegenerateError, EulerFailure
from topzeta.euler.cache import EulerCacheInterface, EulerRecord
from topzeta.euler.torus import TorusVariety, smooth_on_torus, torus_split
from topzeta.euler.volumes import mixed_volume
from topzeta.ideals import PolyIdeal
from topzeta.laurent import LaurentPolynomial, polynomial_ring
from topzeta.polyhedra import HalfOpenCone, normal_fan_pieces
from topzeta.polyhedra.linalg import IntMatrix, mat_mul, smith_normal_form

__all__ = [
    "EulerResult",
    "khovanskii_nondegenerate",
    "bkk_euler",
    "euler_characteristic",
    "EulerCalculator",
]

logger = logging.getLogger(__name__)


@define(frozen=True, kw_only=True)
class EulerResult:
    value: Optional[int] = None
    failure: Optional[str] = None
    """Reason why no method applied; ``None`` on success."""

    @property
    def ok(self) -> bool:
        return self.failure is None

    def unwrap(self) -> int:
        if self.failure is not None:
            raise EulerFailure(self.failure)
        return self.value


def khovanskii_nondegenerate(V: TorusVariety) -> bool:
    """Whether every face system of ``Newton(Π fᵢ)`` satisfies the Jacobian rank condition."""
    polys = list(V.polys)
    if not polys:
        return True
    newton = reduce(add, (f.newton_polytope() for f in polys))
    for _, piece in normal_fan_pieces(newton, HalfOpenCone.ambient(V.nvars)):
        omega = piece.interior_point()
        if not smooth_on_torus([f.initial_form(omega) for f in polys], V.nvars):
            return False
    return True


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All ``(a₁,…,a_k)`` with ``aᵢ ≥ 1`` summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def bkk_euler(V: TorusVariety, check: bool = True) -> EulerResult:
    """Khovanskii's formula ``χ = (−1)^(n−k) Σ_{a₁+…+a_k=n, aᵢ≥1} MV(Δ₁^a₁,…,Δ_k^a_k)``."""
    if check and not khovanskii_nondegenerate(V):
        raise DegenerateError(f"The system {[str(f) for f in V.polys]} is degenerate.")
    n, k = V.nvars, len(V.polys)
    if V.obviously_empty:
        return EulerResult(value=0)
    if k == 0:
        return EulerResult(value=int(n == 0))
    if k > n:
        return EulerResult(value=0)

    newton = [f.newton_polytope() for f in V.polys]
    total = 0
    for a in _compositions(n, k):
        arguments = [P for P, times in zip(newton, a) for _ in range(times)]
        total += mixed_volume(arguments)
    if total.denominator != 1:
        raise ArithmeticError(f"Non-integral mixed volume sum {total}.")
    return EulerResult(value=(-1) ** (n - k) * int(total))


def _unimodular_completion(vector: Sequence[int]) -> IntMatrix:
    """A unimodular ``U`` with ``vector·U = eₖ`` (the last unit vector) for primitive ``vector``."""
    k = len(vector)
    _, _, A = smith_normal_form([list(vector)], k)
    # vector·A = (±1, 0, …); fix the sign and rotate the first column to the end
    sign = sum(vector[i] * A[i][0] for i in range(k))
    columns = [[A[i][j] for i in range(k)] for j in range(1, k)]
    columns.append([sign * A[i][0] for i in range(k)])
    return tuple(tuple(columns[j][i] for j in range(k)) for i in range(k))


@define(frozen=True, kw_only=True)
class _Elimination:
    index: int
    matrix: IntMatrix
    """Torus automorphism after which ``f_index`` is ``c·X^β·(Xₙ − w)``."""
    w: LaurentPolynomial
    """In the first ``n − 1`` variables."""


def _find_elimination(polys: Sequence[LaurentPolynomial], n: int) -> Optional[_Elimination]:
    order = sorted(range(len(polys)), key=lambda i: (len(polys[i].terms), i))
    for index in order:
        f = polys[index]
        terms = f.terms
        for (base, _), (lead, c0) in itertools.permutations(terms, 2):
            rest = [
                tuple(a - b for a, b in zip(e, base))
                for e, _ in terms
                if e not in (base, lead)
            ]
            beta = tuple(a - b for a, b in zip(lead, base))
            if rest:
                _, D, A0 = smith_normal_form(rest, n)
                r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
            else:
                A0 = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
                r = 0
            moved = [sum(beta[i] * A0[i][j] for i in range(n)) for j in range(n)]
            tail = moved[r:]
            if not tail or reduce(gcd, tail, 0) != 1:
                continue
            U = _unimodular_completion(tail)
            block = [[int(i == j) for j in range(n)] for i in range(n)]
            for i in range(n - r):
                for j in range(n - r):
                    block[r + i][r + j] = U[i][j]
            A = mat_mul(A0, block)

            g = f.shift(tuple(-x for x in base)).substitute_exponents(A)
            lead_exponent = tuple(
                sum(beta[i] * A[i][j] for i in range(n)) for j in range(n)
            )
            if lead_exponent[-1] != 1 or any(
                e[-1] for e, _ in g.terms if e != lead_exponent
            ):
                raise ArithmeticError(
                    "Unimodular completion did not isolate the last variable."
                )
            m = lead_exponent[:-1] + (0,)
            remainder = LaurentPolynomial(
                nvars=n, terms=[(e, c) for e, c in g.terms if e != lead_exponent]
            )
            w = (-remainder).shift(tuple(-x for x in m)).scale(1 / c0).restrict(n - 1)
            return _Elimination(index=index, matrix=A, w=w)
    return None


def _substitute_last(f: LaurentPolynomial, w: LaurentPolynomial) -> LaurentPolynomial:
    """``f(X', w)·w^K`` with ``K`` clearing negative powers of ``w``."""
    n = f.nvars
    low = min(e[-1] for e in f.support)
    K = max(0, -low)
    powers: Dict[int, LaurentPolynomial] = {}
    out = LaurentPolynomial.zero(n - 1)
    for e, c in f.terms:
        k = e[-1] + K
        if k not in powers:
            powers[k] = w**k
        out = out + powers[k].shift(e[:-1]).scale(c)
    return out


def _squarefree_degree(p: LaurentPolynomial) -> int:
    x = symbols("x")
    poly = Poly({(e[0],): Rational(c.numerator, c.denominator) for e, c in p.terms}, x)
    return poly.sqf_part().degree()


def _shape_count(ideal: PolyIdeal) -> Optional[int]:
    """Number of torus points of a saturated zero-dimensional ideal in shape position."""
    n = ideal.nvars
    lex_ideal = PolyIdeal(nvars=n, generators=ideal.generators, order="lex")
    basis = lex_ideal.groebner_basis
    if len(basis) != n:
        return None
    univariate = None
    linear = set()
    for g in basis:
        used = {i for e in g.support for i, x in enumerate(e) if x}
        if used == {n - 1}:
            univariate = g
            continue
        heads = used - {n - 1}
        if len(heads) != 1:
            return None
        (i,) = heads
        if max(e[i] for e in g.support) != 1:
            return None
        if any(e[i] and e[n - 1] for e in g.support):
            return None
        linear.add(i)
    if univariate is None or linear != set(range(n - 1)):
        return None
    last = [[int(i == n - 1)] for i in range(n)]
    return _squarefree_degree(univariate.substitute_exponents(last))


@define(kw_only=True)
class EulerCalculator:
    """Runs the pipeline with memoization through an optional :py:class:`EulerCacheInterface`."""

    store: Optional[EulerCacheInterface] = None

    def compute(self, V: TorusVariety) -> EulerResult:
        try:
            return EulerResult(value=self._compute(V))
        except EulerFailure as e:
            return EulerResult(failure=e.reason)

    def _compute(self, V: TorusVariety) -> int:
        n = V.nvars
        if V.obviously_empty:
            return 0
        if not V.polys:
            return int(n == 0)

        split = torus_split(V.polys, n)
        if split.torus_rank >= 1:
            logger.debug("torus factor of rank %d, chi = 0", split.torus_rank)
            return 0

        key = V.key()
        if self.store is not None:
            record = self.store.get(key)
            if record is not None:
                if record.failure is not None:
                    raise EulerFailure(record.failure, V)
                return record.value

        try:
            value = self._full_rank(V)
        except EulerFailure as e:
            if self.store is not None:
                self.store.put(EulerRecord(key=key, nvars=n, failure=e.reason))
            raise
        if self.store is not None:
            self.store.put(EulerRecord(key=key, nvars=n, value=value))
        return value

    def _full_rank(self, V: TorusVariety) -> int:
        n = V.nvars
        simplified = _simplify_system(V)
        if simplified.total_support < V.total_support:
            logger.debug(
                "simplified support %d -> %d", V.total_support, simplified.total_support
            )
            return self._compute(simplified)

        if len(V.polys) >= n:
            ideal = PolyIdeal.from_laurent(V.polys, n).saturate_by_coordinates()
            if ideal.is_unit:
                return 0
            count = _shape_count(ideal)
            if count is not None:
                logger.debug("zero-dimensional system with %d torus points", count)
                return count

        if khovanskii_nondegenerate(V):
            logger.debug("non-degenerate system, using mixed volumes")
            return bkk_euler(V, check=False).value

        elimination = _find_elimination(V.polys, n)
        if elimination is not None:
            moved = [f.substitute_exponents(elimination.matrix) for f in V.polys]
            others = [
                _substitute_last(g, elimination.w)
                for i, g in enumerate(moved)
                if i != elimination.index
            ]
            main = TorusVariety(nvars=n - 1, polys=others)
            excluded = TorusVariety(nvars=n - 1, polys=others + [elimination.w])
            logger.debug("eliminating a variable from %d polynomials", len(V.polys))
            return self._compute(main) - self._compute(excluded)

        raise EulerFailure(
            f"No method computes the Euler characteristic of {[str(f) for f in V.polys]} "
            f"in {n} variables.",
            V,
        )


def _simplify_system(V: TorusVariety) -> TorusVariety:
    """Saturate once, then reduce generators modulo each other while supports shrink."""
    n = V.nvars
    ideal = PolyIdeal.from_laurent(V.polys, n).saturate_by_coordinates()
    if ideal.is_unit:
        return TorusVariety(nvars=n, polys=[LaurentPolynomial.constant(n, 1)])

    R = polynomial_ring(n)
    current: List[LaurentPolynomial] = list(ideal.generators)
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            others = [g.to_ring_element(R) for j, g in enumerate(current) if j != i]
            if not others:
                break
            reduced = LaurentPolynomial.from_ring_element(
                current[i].to_ring_element(R).rem(others), n
            )
            if len(reduced.terms) < len(current[i].terms):
                if reduced.is_zero:
                    del current[i]
                else:
                    current[i] = reduced
                changed = True
                break
    return TorusVariety(nvars=n, polys=current)


def euler_characteristic(
    V: TorusVariety, store: Optional[EulerCacheInterface] = None
) -> EulerResult:
    return EulerCalculator(store=store).compute(V)
