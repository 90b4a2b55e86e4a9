"""Normalized mixed volumes of lattice polytopes."""

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Sequence

from topzeta.errors import DimensionMismatchError
from topzeta.polyhedra import Polytope

__all__ = ["mixed_volume", "minkowski_combination"]


def minkowski_combination(
    polytopes: Sequence[Polytope], weights: Sequence[int]
) -> Polytope:
    """``Σ bⱼ·Pⱼ`` over the nonzero weights."""
    dim = polytopes[0].dim
    out = Polytope(dim=dim, points=[(0,) * dim])
    for P, b in zip(polytopes, weights):
        if b:
            out = out + P.scaled(b)
    return out


def mixed_volume(polytopes: Sequence[Polytope]) -> Fraction:
    """``MV(P₁,…,Pₙ)`` normalized so that ``MV(P,…,P) = n!·Vol(P)``.

    Repeated polytopes are grouped, so the alternating formula runs over ``0 ≤ b ≤ a`` rather
    than over all subsets:
    ``Σ_{b≠0} (−1)^(n−|b|) Π C(aⱼ,bⱼ) Vol(Σ bⱼQⱼ)``.
    """
    n = len(polytopes)
    if n == 0:
        return Fraction(1)
    for P in polytopes:
        if P.dim != n:
            raise DimensionMismatchError(
                f"Mixed volume needs {n} polytopes in dimension {n}, got one in dimension {P.dim}."
            )

    counts: Dict[Polytope, int] = {}
    for P in polytopes:
        counts[P] = counts.get(P, 0) + 1
    distinct: List[Polytope] = list(counts)
    multiplicities = [counts[P] for P in distinct]

    if len(distinct) == 1:
        return distinct[0].volume * factorial(n)

    total = Fraction(0)
    for b in itertools.product(*(range(a + 1) for a in multiplicities)):
        size = sum(b)
        if size == 0:
            continue
        coefficient = 1
        for a_j, b_j in zip(multiplicities, b):
            coefficient *= comb(a_j, b_j)
        sign = -1 if (n - size) % 2 else 1
        total += sign * coefficient * minkowski_combination(distinct, b).volume
    return total
