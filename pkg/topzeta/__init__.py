"""Topological subalgebra, ideal and submodule zeta functions via toric data."""

from topzeta.algebra import AlgebraInput, Mode, build_problem, named_algebra
from topzeta.engine import RunConfig, RunOutcome, run_algebra, topological_zeta_function
from topzeta.topeval import RationalFunction1V

__all__ = [
    "AlgebraInput",
    "Mode",
    "RunConfig",
    "RunOutcome",
    "RationalFunction1V",
    "build_problem",
    "named_algebra",
    "run_algebra",
    "topological_zeta_function",
]
