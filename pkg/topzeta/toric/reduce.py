"""Greedy reduction of singular toric data.

A reduction candidate ``(i, j, tᵢ, tⱼ)`` splits the cone along the sign of
``⟨αⱼ − αᵢ, ω⟩`` and cancels ``tⱼ`` (resp. ``tᵢ``) on each side. All candidates of the minimal
singular index set are tried; the first one leaving no singular piece wins, otherwise the one
with the smallest average weight over its singular pieces.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from attrs import define

from topzeta.errors import ReductionFailure
from topzeta.laurent import Term
from topzeta.toric.datum import ToricDatum
from topzeta.toric.regularity import find_min_singular_subset, is_regular
from topzeta.toric.simplify import simplify

__all__ = [
    "ReductionCandidate",
    "reduction_candidates",
    "refine",
    "reduce",
    "DEFAULT_DEPTH_CAP",
]

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_CAP = 3


@define(frozen=True, kw_only=True)
class ReductionCandidate:
    i: int
    j: int
    t_i: Term
    """A term of ``init(f_i)``."""
    t_j: Term
    """A term of ``init(f_j)``."""

    def sort_key(self) -> Tuple:
        return (self.i, self.j, self.t_i.exponent, self.t_j.exponent)

    def split(self, T: ToricDatum) -> Tuple[ToricDatum, ToricDatum]:
        """``(T^≤, T^>)``: the cone where ``tⱼ/tᵢ`` resp. ``tᵢ/tⱼ`` is integral, rewritten."""
        polys = list(T.polys)
        f_i, f_j = polys[self.i], polys[self.j]
        delta = tuple(b - a for a, b in zip(self.t_i.exponent, self.t_j.exponent))

        low = list(polys)
        low[self.j] = f_j - f_i.mul_term(self.t_j / self.t_i)
        high = list(polys)
        high[self.i] = f_i - f_j.mul_term(self.t_i / self.t_j)

        return (
            T.evolve(cone=T.cone.with_weak(delta), polys=low),
            T.evolve(cone=T.cone.with_strict(tuple(-x for x in delta)), polys=high),
        )


def reduction_candidates(T: ToricDatum, J: Tuple[int, ...]) -> List[ReductionCandidate]:
    inits = T.initial_forms()
    out = []
    for a, i in enumerate(J):
        for j in J[a + 1 :]:
            for t_i in inits[i].term_list():
                for t_j in inits[j].term_list():
                    out.append(ReductionCandidate(i=i, j=j, t_i=t_i, t_j=t_j))
    return sorted(out, key=ReductionCandidate.sort_key)


def refine(T: ToricDatum) -> List[ToricDatum]:
    """Nontrivial, balanced and simple data equivalent to ``T``."""
    out, todo = [], [T]
    while todo:
        piece = simplify(todo.pop())
        if piece.is_trivial:
            continue
        if piece.is_balanced:
            out.append(piece)
        else:
            todo.extend(reversed(piece.balance()))
    return out


@define(frozen=True, kw_only=True)
class _Scored:
    candidate: ReductionCandidate
    pieces: Tuple[ToricDatum, ...]
    singular: Tuple[ToricDatum, ...]

    @property
    def score(self) -> Fraction:
        return Fraction(sum(P.weight() for P in self.singular), len(self.singular))


def _score(T: ToricDatum, candidate: ReductionCandidate) -> _Scored:
    low, high = candidate.split(T)
    pieces = tuple(refine(low) + refine(high))
    singular = tuple(P for P in pieces if not is_regular(P))
    return _Scored(candidate=candidate, pieces=pieces, singular=singular)


def reduce(T: ToricDatum, depth_cap: int = DEFAULT_DEPTH_CAP) -> List[ToricDatum]:
    """Replace a balanced, simple and singular datum by data that are hopefully closer to regular.

    Singular outputs that are not lighter than ``T`` go one level deeper; regular outputs
    keep the depth of ``T``. Raises :py:class:`~topzeta.errors.ReductionFailure` if the minimal
    singular index set is a singleton or a singular output would exceed the depth cap.
    """
    J = find_min_singular_subset(T)
    if len(J) == 1:
        raise ReductionFailure(
            f"The initial form of polynomial {J[0]} is singular on its own.", T
        )

    best: Optional[_Scored] = None
    for candidate in reduction_candidates(T, J):
        scored = _score(T, candidate)
        logger.debug(
            "candidate %s: %d pieces, %d singular",
            candidate.sort_key(),
            len(scored.pieces),
            len(scored.singular),
        )
        if not scored.singular:
            best = scored
            break
        if best is None or scored.score < best.score:
            best = scored

    # Only singular pieces go back on the work list.
    base = T.weight()
    singular = {id(P) for P in best.singular}
    out = []
    for P in best.pieces:
        depth = T.depth
        if id(P) in singular and P.weight() >= base:
            depth += 1
        if depth > depth_cap:
            raise ReductionFailure(
                f"Reduction depth would exceed the cap of {depth_cap}.", T
            )
        out.append(P.evolve(depth=depth))
    return out
