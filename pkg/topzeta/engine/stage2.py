"""The evaluation stage: sum the reduced contributions of all regular data.

Tasks are ``(datum, J)`` pairs. They run in a process pool whose workers each open the shared
Euler cache once; partial sums combine exactly, so the result does not depend on ``jobs``.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence, Tuple

from attrs import define

from topzeta.engine.config import RunConfig
from topzeta.errors import EulerFailure
from topzeta.euler import EulerCalculator, open_euler_cache
from topzeta.helpers import serialize, wrap_progress
from topzeta.toric import ToricDatum
from topzeta.topeval import SimpleTermSum, all_subsets, evaluate_subset

__all__ = ["Task", "stage2_tasks", "stage2"]

logger = logging.getLogger(__name__)

Task = Tuple[ToricDatum, Tuple[int, ...]]


@define(frozen=True, kw_only=True)
class _TaskResult:
    terms: SimpleTermSum
    failure: Optional[str] = None
    variety: Optional[dict] = None


@define(kw_only=True)
class _Evaluator:
    beta: Tuple[Tuple[int, ...], ...]
    shifts: Tuple[int, ...]
    calculator: EulerCalculator

    def __call__(self, task: Task) -> _TaskResult:
        T, J = task
        try:
            return _TaskResult(
                terms=evaluate_subset(T, J, self.beta, self.shifts, self.calculator)
            )
        except EulerFailure as e:
            variety = None if e.variety is None else serialize(e.variety)
            return _TaskResult(terms=SimpleTermSum(), failure=e.reason, variety=variety)


_worker: Optional[_Evaluator] = None


def _init_worker(beta, shifts, euler_cache: Optional[str]) -> None:
    global _worker
    calculator = EulerCalculator(store=open_euler_cache(euler_cache))
    _worker = _Evaluator(beta=beta, shifts=shifts, calculator=calculator)


def _run_chunk(tasks: Sequence[Task]) -> _TaskResult:
    assert _worker is not None
    return _combine(_worker(task) for task in tasks)


def _combine(results) -> _TaskResult:
    total = SimpleTermSum()
    for result in results:
        if result.failure is not None:
            return result
        total += result.terms
    return _TaskResult(terms=total)


def stage2_tasks(regular: Sequence[ToricDatum]) -> List[Task]:
    return [(T, J) for T in regular for J in all_subsets(len(T.polys))]


def _chunks(tasks: List[Task], jobs: int) -> List[List[Task]]:
    size = max(1, len(tasks) // (8 * jobs))
    return [tasks[i : i + size] for i in range(0, len(tasks), size)]


def stage2(
    regular: Sequence[ToricDatum],
    beta: Sequence[Sequence[int]],
    shifts: Sequence[int],
    cfg: Optional[RunConfig] = None,
) -> SimpleTermSum:
    """``Σ_T Σ_J e_J·red W_J`` specialized to one variable.

    Raises :py:class:`~topzeta.errors.EulerFailure` carrying the reason and, when known, the
    serialized torus variety in ``variety``.
    """
    if cfg is None:
        cfg = RunConfig(jobs=1)
    beta = tuple(tuple(int(x) for x in row) for row in beta)
    shifts = tuple(int(c) for c in shifts)
    tasks = stage2_tasks(regular)
    logger.info("Stage II: %d tasks on %d workers", len(tasks), cfg.jobs)

    if cfg.jobs == 1 or len(tasks) <= 1:
        evaluator = _Evaluator(
            beta=beta,
            shifts=shifts,
            calculator=EulerCalculator(store=open_euler_cache(cfg.euler_cache)),
        )
        progress = wrap_progress(tasks, cfg.verbose, desc="evaluate")
        outcome = _combine(evaluator(task) for task in progress)
    else:
        chunks = _chunks(tasks, cfg.jobs)
        partial: Dict[int, _TaskResult] = {}
        with ProcessPoolExecutor(
            max_workers=cfg.jobs,
            initializer=_init_worker,
            initargs=(beta, shifts, cfg.euler_cache),
        ) as executor:
            futures = {
                executor.submit(_run_chunk, chunk): i for i, chunk in enumerate(chunks)
            }
            done = as_completed(futures)
            for future in wrap_progress(
                done, cfg.verbose, total=len(futures), desc="evaluate"
            ):
                partial[futures[future]] = future.result()
        outcome = _combine(partial[i] for i in sorted(partial))

    if outcome.failure is not None:
        failure = EulerFailure(outcome.failure)
        failure.variety = outcome.variety
        raise failure
    logger.info(
        "Stage II: %d simple terms, %d denominators",
        outcome.terms.n_terms,
        len(outcome.terms),
    )
    return outcome.terms
