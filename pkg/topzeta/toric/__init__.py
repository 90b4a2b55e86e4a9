from topzeta.toric.datum import ToricDatum, balance, is_balanced, weight
from topzeta.toric.reduce import (
    DEFAULT_DEPTH_CAP,
    ReductionCandidate,
    reduce,
    reduction_candidates,
    refine,
)
from topzeta.toric.regularity import find_min_singular_subset, index_subsets, is_regular
from topzeta.toric.simplify import is_simple, simplify

__all__ = [
    "ToricDatum",
    "ReductionCandidate",
    "DEFAULT_DEPTH_CAP",
    "is_balanced",
    "balance",
    "is_regular",
    "simplify",
    "is_simple",
    "weight",
    "find_min_singular_subset",
    "index_subsets",
    "reduction_candidates",
    "refine",
    "reduce",
]
