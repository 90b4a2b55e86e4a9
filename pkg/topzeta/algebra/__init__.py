from topzeta.algebra.defaults import NAMED_ALGEBRAS, NamedAlgebra, named_algebra
from topzeta.algebra.family import (
    diagonal_indices,
    generic_matrix_rows,
    laurent_family,
    variable_index,
)
from topzeta.algebra.input import AlgebraInput, Mode
from topzeta.algebra.problem import ProblemInstance, build_problem

__all__ = [
    "Mode",
    "AlgebraInput",
    "ProblemInstance",
    "NamedAlgebra",
    "NAMED_ALGEBRAS",
    "named_algebra",
    "variable_index",
    "diagonal_indices",
    "generic_matrix_rows",
    "laurent_family",
    "build_problem",
]
