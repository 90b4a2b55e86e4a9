from topzeta.topeval.evaluate import (
    all_subsets,
    euler_coefficient,
    evaluate_subset,
    evaluate_topologically,
    split_dimension,
)
from topzeta.topeval.interpolation import (
    candidate_denominator,
    evaluation_points,
    interpolate,
)
from topzeta.topeval.reduction import (
    choose_gammas,
    cone_CJ,
    substitution_matrix,
    wj_reduction,
)
from topzeta.topeval.terms import Factor, RationalFunction1V, SimpleTermSum

__all__ = [
    "Factor",
    "SimpleTermSum",
    "RationalFunction1V",
    "choose_gammas",
    "cone_CJ",
    "substitution_matrix",
    "wj_reduction",
    "all_subsets",
    "split_dimension",
    "euler_coefficient",
    "evaluate_subset",
    "evaluate_topologically",
    "candidate_denominator",
    "evaluation_points",
    "interpolate",
]
