"""Seeded property suites behind ``topzeta verify``.

Every suite draws its random instances from its own ``random.Random`` seeded from the run seed,
so a report can be reproduced with the same ``--seed``.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Dict, List, Optional, Tuple

from attrs import define, field
from sqlalchemy.exc import DatabaseError

from topzeta.euler import EulerCalculator, TorusVariety, open_euler_cache, verify_cache
from topzeta.helpers import wrap_progress
from topzeta.laurent import LaurentPolynomial
from topzeta.polyhedra import (
    HalfOpenCone,
    enumerate_lattice_points,
    generating_function,
    smith_normal_form,
)
from topzeta.polyhedra.linalg import int_det, mat_mul
from topzeta.polyhedra.triangulation import lexicographic_order, reverse_lexicographic_order
from topzeta.toric import ToricDatum, is_regular, reduction_candidates, simplify
from topzeta.topeval import wj_reduction

__all__ = ["VerifyConfig", "CheckResult", "SUITES", "run_checks"]

logger = logging.getLogger(__name__)

SERIES_BOUND = 8


@dataclass
class VerifyConfig:
    seed: int = 0
    samples: int = 50
    """Random instances per suite."""
    euler_cache: Optional[str] = None
    """Also validate every record of this Euler cache."""
    verbose: bool = False


@define(kw_only=True)
class CheckResult:
    name: str
    checked: int = 0
    violations: List[str] = field(factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_cone(rng: Random, dim: int) -> HalfOpenCone:
    C = HalfOpenCone.orthant(dim)
    for _ in range(rng.randint(0, 2)):
        C = C.with_weak([rng.randint(-2, 2) for _ in range(dim)])
    for _ in range(rng.randint(0, 1)):
        C = C.with_strict([rng.randint(-1, 2) for _ in range(dim)])
    return C


def _random_polynomial(rng: Random, nvars: int, nterms: int) -> LaurentPolynomial:
    terms = [
        (tuple(rng.randint(0, 2) for _ in range(nvars)), rng.choice([-2, -1, 1, 2]))
        for _ in range(nterms)
    ]
    return LaurentPolynomial(nvars=nvars, terms=terms)


def _random_datum(rng: Random, nvars: int, npolys: int) -> ToricDatum:
    polys = [_random_polynomial(rng, nvars, rng.randint(2, 3)) for _ in range(npolys)]
    return ToricDatum(cone=_random_cone(rng, nvars), polys=polys)


def _box(dim: int, size: int):
    return itertools.product(range(size + 1), repeat=dim)


def check_series(rng: Random, result: CheckResult) -> None:
    """Expanded generating functions count the lattice points of the cone up to degree 8."""
    dim = rng.randint(1, 3)
    bound = SERIES_BOUND
    C0 = _random_cone(rng, dim)
    expected = enumerate_lattice_points(C0, bound)
    actual = generating_function(C0).series(bound)
    if actual != expected:
        result.violations.append(f"series of {C0} up to degree {bound} is wrong")


def check_triangulations(rng: Random, result: CheckResult) -> None:
    """The reduction modulo q−1 does not depend on the triangulation."""
    dim, m = rng.randint(1, 3), rng.randint(1, 2)
    C = _random_cone(rng, dim)
    if C.is_empty:
        return
    A = [[1] + [rng.randint(0, 2) for _ in range(m)] for _ in range(dim)]
    shifts = [rng.randint(0, 3) for _ in range(m)]
    d = C.dimension
    first = wj_reduction(C, A, d, shifts, lexicographic_order)
    second = wj_reduction(C, A, d, shifts, reverse_lexicographic_order)
    points = 0
    while points < 5:
        s = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
        try:
            a, b = first.evaluate(s), second.evaluate(s)
        except ZeroDivisionError:
            continue
        points += 1
        if a != b:
            result.violations.append(f"triangulations of {C} disagree at s={s}: {a} != {b}")
            return


def _check_partition(
    result: CheckResult, whole: HalfOpenCone, pieces: List[HalfOpenCone], what: str
) -> None:
    for point in _box(whole.dim, 3):
        count = sum(P.contains(point) for P in pieces)
        if count != int(whole.contains(point)):
            result.violations.append(f"{what} covers {point} {count} times")
            return


def check_balance(rng: Random, result: CheckResult) -> None:
    """Balancing splits the cone into balanced pieces without overlaps."""
    T = _random_datum(rng, rng.randint(1, 3), rng.randint(1, 2))
    pieces = T.balance()
    if not all(P.is_balanced for P in pieces):
        result.violations.append(f"balancing {T} left an unbalanced piece")
    _check_partition(result, T.cone, [P.cone for P in pieces], f"balancing {T}")


def check_reduction_split(rng: Random, result: CheckResult) -> None:
    """Both sides of a reduction step partition the cone."""
    T = _random_datum(rng, rng.randint(2, 3), 2)
    for P in T.balance():
        if P.is_trivial:
            continue
        candidates = reduction_candidates(P, (0, 1))
        if candidates:
            low, high = rng.choice(candidates).split(P)
            _check_partition(result, P.cone, [low.cone, high.cone], f"splitting {P}")
            return


def check_snf(rng: Random, result: CheckResult) -> None:
    """``C·B·A = D`` with unimodular ``C``, ``A`` and a divisibility chain on ``D``."""
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    B = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
    C, D, A = smith_normal_form(B)
    if mat_mul(mat_mul(C, B), A) != D:
        result.violations.append(f"Smith normal form of {B} does not reproduce D")
    if abs(int_det(C)) != 1 or abs(int_det(A)) != 1:
        result.violations.append(f"Smith normal form of {B} has non-unimodular transforms")
    diagonal = [D[i][i] for i in range(min(rows, cols))]
    off = any(D[i][j] for i in range(rows) for j in range(cols) if i != j)
    chain = all(b % a == 0 if a else b == 0 for a, b in zip(diagonal, diagonal[1:]))
    if off or not chain or any(x < 0 for x in diagonal):
        result.violations.append(f"{D} is not in Smith normal form")


def check_simplify(rng: Random, result: CheckResult) -> None:
    """Simplification keeps balanced data balanced and does not change regularity."""
    T = _random_datum(rng, rng.randint(1, 3), rng.randint(1, 2))
    for P in T.balance():
        S = simplify(P)
        if S.is_trivial:
            continue
        if not S.is_balanced:
            result.violations.append(f"simplifying the balanced {P} gives {S}")
        elif is_regular(S) != is_regular(P):
            result.violations.append(f"simplifying {P} changes its regularity")


def _euler_cases() -> List[Tuple[str, TorusVariety, int]]:
    x1 = LaurentPolynomial.variable(2, 0)
    x2 = LaurentPolynomial.variable(2, 1)
    one = LaurentPolynomial.constant(2, 1)
    cases = [(f"T^{n}", TorusVariety(nvars=n), 0) for n in range(1, 4)]
    cases += [
        ("V(X1 + X2 + 1)", TorusVariety(nvars=2, polys=[x1 + x2 + one]), -1),
        ("V(X1 - 1)", TorusVariety(nvars=2, polys=[x1 - one]), 0),
        (
            "V(X1 + X2 + 1, X1 - X2)",
            TorusVariety(nvars=2, polys=[x1 + x2 + one, x1 - x2]),
            1,
        ),
    ]
    return cases


def run_euler_suite(result: CheckResult) -> None:
    calculator = EulerCalculator()
    for name, V, expected in _euler_cases():
        result.checked += 1
        value = calculator.compute(V)
        if value.value != expected:
            result.violations.append(f"chi({name}) = {value.value} instead of {expected}")


SUITES: Dict[str, Callable[[Random, CheckResult], None]] = {
    "series": check_series,
    "triangulation": check_triangulations,
    "balance": check_balance,
    "reduction_split": check_reduction_split,
    "snf": check_snf,
    "simplify": check_simplify,
}


def run_checks(cfg: VerifyConfig) -> List[CheckResult]:
    results = []
    for k, (name, suite) in enumerate(SUITES.items()):
        rng = Random(cfg.seed * 1000 + k)
        result = CheckResult(name=name)
        for _ in wrap_progress(range(cfg.samples), cfg.verbose, desc=name):
            suite(rng, result)
            result.checked += 1
            if result.violations:
                break
        logger.info(
            "suite %s: %d instances, %d violations",
            name,
            result.checked,
            len(result.violations),
        )
        results.append(result)

    euler = CheckResult(name="euler")
    run_euler_suite(euler)
    results.append(euler)

    if cfg.euler_cache is not None:
        cache = CheckResult(name="euler_cache")
        try:
            cache.checked, problem = verify_cache(open_euler_cache(cfg.euler_cache))
        except DatabaseError as e:
            cache.violations.append(f"{cfg.euler_cache} is not a readable Euler cache: {e}")
        else:
            if problem is not None:
                record, message = problem
                cache.violations.append(f"record {record.key!r}: {message}")
        results.append(cache)
    return results
