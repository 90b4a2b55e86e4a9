import logging
import warnings
from contextlib import ExitStack
from dataclasses import replace
from fractions import Fraction
from typing import Dict, Optional, Sequence

from attrs import define, evolve, field

from topzeta.algebra import AlgebraInput, Mode, ProblemInstance, build_problem
from topzeta.engine.config import RunConfig
from topzeta.engine.stage1 import stage1
from topzeta.engine.stage2 import stage2
from topzeta.errors import EulerFailure, ReductionFailure, VerificationMismatchError
from topzeta.helpers import Timer, named_record, serialize
from topzeta.toric import ToricDatum
from topzeta.topeval import RationalFunction1V, candidate_denominator, interpolate

__all__ = [
    "RunFailure",
    "RunStats",
    "RunOutcome",
    "topological_zeta_function",
    "run_problem",
    "run_algebra",
]

logger = logging.getLogger(__name__)


@named_record("run_failure")
@define(frozen=True, kw_only=True)
class RunFailure:
    phase: str
    """``"reduce"`` or ``"euler"``."""
    reason: str
    datum: Optional[dict] = None
    """The serialized toric datum or torus variety the run got stuck on."""


@named_record("run_stats")
@define(kw_only=True)
class RunStats:
    n_regular: int = 0
    n_terms: int = 0
    degree: Optional[int] = None
    magic: Optional[Fraction] = field(
        default=None, converter=lambda x: None if x is None else Fraction(x)
    )
    timings: Dict[str, float] = field(factory=dict)
    """Wall time per phase in seconds."""


@define(kw_only=True)
class RunOutcome:
    function: Optional[RationalFunction1V] = None
    failure: Optional[RunFailure] = None
    stats: RunStats = field(factory=RunStats)

    @property
    def ok(self) -> bool:
        return self.failure is None


def _record(obj) -> Optional[dict]:
    if obj is None or isinstance(obj, dict):
        return obj
    return serialize(obj)


def topological_zeta_function(
    T0: ToricDatum,
    beta: Sequence[Sequence[int]],
    shifts: Sequence[int],
    cfg: Optional[RunConfig] = None,
) -> RunOutcome:
    """Reduce ``T0`` to regular data, evaluate them and interpolate the sum.

    Failures of either stage end up in :py:attr:`RunOutcome.failure`; the result of a
    successful run is checked to have degree at most zero.
    """
    if cfg is None:
        cfg = RunConfig(jobs=1)
    outcome = RunOutcome()
    stats = outcome.stats
    timer = Timer(stats.timings)

    with ExitStack() as stack:
        trace = None
        if cfg.trace is not None:
            trace = stack.enter_context(open(cfg.trace, "a", encoding="utf-8"))

        try:
            with timer.phase("reduce"):
                regular = stage1(T0, cfg, trace)
        except ReductionFailure as e:
            outcome.failure = RunFailure(
                phase="reduce", reason=e.reason, datum=_record(e.datum)
            )
            return outcome
        stats.n_regular = len(regular)

    try:
        with timer.phase("evaluate"):
            terms = stage2(regular, beta, shifts, cfg)
    except EulerFailure as e:
        outcome.failure = RunFailure(
            phase="euler", reason=e.reason, datum=_record(e.variety)
        )
        return outcome
    stats.n_terms = terms.n_terms

    with timer.phase("interpolate"):
        function = interpolate(terms, candidate_denominator(terms), seed=cfg.seed)

    if function.degree is not None and function.degree > 0:
        raise VerificationMismatchError(
            f"{function} has positive degree {function.degree}."
        )
    stats.degree = function.degree
    outcome.function = function
    return outcome


def run_problem(problem: ProblemInstance, cfg: Optional[RunConfig] = None) -> RunOutcome:
    """:py:func:`topological_zeta_function` plus the degree and magic checks for algebras."""
    if cfg is None:
        cfg = RunConfig(jobs=1)
    outcome = topological_zeta_function(problem.datum, problem.beta, problem.shifts, cfg)
    if not outcome.ok:
        return outcome

    d = problem.rank
    function = outcome.function
    if problem.algebra.mode is Mode.SUBALGEBRA and function.degree != -d:
        message = f"{function} has degree {function.degree}, expected {-d}."
        logger.warning(message)
        warnings.warn(message)
    if function.is_zero or function.degree <= -d:
        outcome.stats.magic = function.magic(d)

    if cfg.check_magic and outcome.stats.magic is not None:
        extended = run_problem(
            build_problem(problem.algebra.with_abelian_summand()),
            replace(cfg, check_magic=False),
        )
        if extended.ok and extended.stats.magic != outcome.stats.magic:
            message = (
                f"Magic value {outcome.stats.magic} changes to {extended.stats.magic} "
                "after adding an abelian summand."
            )
            logger.warning(message)
            warnings.warn(message)
    return outcome


def run_algebra(algebra: AlgebraInput, cfg: Optional[RunConfig] = None) -> RunOutcome:
    if cfg is None:
        cfg = RunConfig(jobs=1)
    if cfg.run_mode is not None and cfg.run_mode is not algebra.mode:
        algebra = evolve(algebra, mode=cfg.run_mode)
    return run_problem(build_problem(algebra), cfg)
