from fractions import Fraction

import pytest

from topzeta.algebra import NAMED_ALGEBRAS, AlgebraInput, build_problem
from topzeta.algebra.defaults import abelian, heisenberg, truncated_polynomials
from topzeta.engine import (
    RunConfig,
    run_algebra,
    stage1,
    stage2,
    topological_zeta_function,
)
from topzeta.helpers import load_lines
from topzeta.laurent import LaurentPolynomial
from topzeta.polyhedra import HalfOpenCone
from topzeta.toric import ToricDatum
from topzeta.topeval import RationalFunction1V

FAST = [name for name, entry in NAMED_ALGEBRAS.items() if not entry.slow]
SLOW = [name for name, entry in NAMED_ALGEBRAS.items() if entry.slow]

X1, X2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
ONE = LaurentPolynomial.constant(2, 1)


def _line_datum() -> ToricDatum:
    return ToricDatum(cone=HalfOpenCone.strict_orthant(2), polys=[ONE + X1 + X2])


@pytest.mark.parametrize("name", FAST)
def test_named_algebras(name, run_config):
    entry = NAMED_ALGEBRAS[name]
    outcome = run_algebra(entry.build(), run_config)
    assert outcome.ok
    assert outcome.function == entry.expected
    assert outcome.stats.magic == entry.magic


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW)
def test_slow_named_algebras(name):
    entry = NAMED_ALGEBRAS[name]
    outcome = run_algebra(entry.build(), RunConfig(euler_cache=None))
    assert outcome.ok
    assert outcome.function == entry.expected
    if entry.magic is not None:
        assert outcome.stats.magic == entry.magic
    if entry.regular_count is not None:
        assert outcome.stats.n_regular == entry.regular_count


def test_truncated_polynomials(run_config):
    outcome = run_algebra(truncated_polynomials(2), run_config)
    expected = RationalFunction1V(numerator=[2], factors=[(1, 0, 1), (2, 1, 1)])
    assert outcome.function == expected
    assert outcome.stats.magic == 1


def test_heisenberg_ideals(run_config):
    run_config.mode = "ideal"
    outcome = run_algebra(heisenberg(), run_config)
    assert outcome.function == RationalFunction1V(
        numerator=[1], factors=[(1, 0, 1), (1, 1, 1), (3, 2, 1)]
    )
    assert outcome.stats.magic == Fraction(1, 3)


def test_submodules(run_config):
    algebra = AlgebraInput(rank=2, mode="submodule", generators=[[[0, 1], [0, 0]]])
    outcome = run_algebra(algebra, run_config)
    assert str(outcome.function) == "1/(s*(2*s - 1))"
    assert outcome.stats.magic == Fraction(1, 2)


def test_stats(run_config):
    outcome = run_algebra(heisenberg(), run_config)
    assert outcome.stats.n_regular == 1
    assert outcome.stats.degree == -3
    assert set(outcome.stats.timings) == {"reduce", "evaluate", "interpolate"}


def test_trace(tmp_path, run_config):
    run_config.trace = str(tmp_path / "trace.jsonl")
    assert run_algebra(heisenberg(), run_config).ok
    with open(run_config.trace, encoding="utf-8") as fp:
        (event,) = load_lines(fp)
    assert event["event"] == "regular"
    assert isinstance(event["datum"], ToricDatum)
    assert event["datum"].polys == ()


def test_reduction_failure_is_reported(run_config):
    f = LaurentPolynomial(nvars=2, terms=[((-2, 0), 1), ((-1, -1), -2), ((0, -2), 1)])
    T0 = ToricDatum(cone=HalfOpenCone.strict_orthant(2).with_equation((1, -1)), polys=[f])
    outcome = topological_zeta_function(T0, [[1, 0]], [1], run_config)
    assert not outcome.ok
    assert outcome.function is None
    assert outcome.failure.phase == "reduce"
    assert outcome.failure.datum["type"] == "toric_datum"


def test_stage1_keeps_regular_data(run_config):
    T0 = build_problem(abelian(2)).datum
    assert stage1(T0, run_config) == [T0]
    empty = ToricDatum(cone=HalfOpenCone.strict_orthant(1).with_weak((-1,)))
    assert stage1(empty, run_config) == []


def test_workers_agree_with_a_single_process(run_config):
    regular = [_line_datum(), _line_datum()]
    single = stage2(regular, [[1, 0]], [1], run_config)
    parallel = stage2(regular, [[1, 0]], [1], RunConfig(jobs=2, euler_cache=None))
    assert parallel.terms == single.terms
    assert parallel.n_terms == single.n_terms


def test_magic_check_passes_for_heisenberg(recwarn, run_config):
    run_config.check_magic = True
    outcome = run_algebra(heisenberg(), run_config)
    assert outcome.stats.magic == Fraction(3, 4)
    assert not [w for w in recwarn if "Magic" in str(w.message)]


@pytest.mark.parametrize(
    "kwargs", [dict(jobs=0), dict(depth_cap=0), dict(mode="subrings")]
)
def test_invalid_run_config(kwargs):
    with pytest.raises(ValueError):
        RunConfig(euler_cache=None, **kwargs)
