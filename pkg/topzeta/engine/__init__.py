from topzeta.engine.config import EULER_CACHE_ENV, RunConfig
from topzeta.engine.outcome import (
    RunFailure,
    RunOutcome,
    RunStats,
    run_algebra,
    run_problem,
    topological_zeta_function,
)
from topzeta.engine.stage1 import stage1
from topzeta.engine.stage2 import stage2, stage2_tasks

__all__ = [
    "EULER_CACHE_ENV",
    "RunConfig",
    "RunFailure",
    "RunStats",
    "RunOutcome",
    "stage1",
    "stage2",
    "stage2_tasks",
    "topological_zeta_function",
    "run_problem",
    "run_algebra",
]
