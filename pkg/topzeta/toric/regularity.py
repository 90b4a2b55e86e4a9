"""Regularity of balanced toric data.

A balanced datum is regular if for every index set ``J`` the initial forms ``init(fⱼ), j ∈ J``
define a smooth complete intersection of codimension ``|J|`` in the torus (or nothing at
all). Subsets are tested by increasing size and then lexicographically, so the first failure
is inclusion-minimal.
"""

import itertools
import logging
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from topzeta.errors import IsRegularError, NotBalancedError
from topzeta.euler.torus import smooth_on_torus
from topzeta.laurent import LaurentPolynomial
from topzeta.toric.datum import ToricDatum

__all__ = ["is_regular", "find_min_singular_subset", "singular_subset", "index_subsets"]

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def _smooth(polys: Tuple[LaurentPolynomial, ...], nvars: int) -> bool:
    return smooth_on_torus(polys, nvars)


def index_subsets(r: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty subsets of ``range(r)`` by size, then lexicographically."""
    for size in range(1, r + 1):
        yield from itertools.combinations(range(r), size)


def singular_subset(
    initial_forms: Sequence[LaurentPolynomial], nvars: int
) -> Optional[Tuple[int, ...]]:
    """The first index set violating the rank condition, or ``None``."""
    for J in index_subsets(len(initial_forms)):
        system = tuple(initial_forms[j] for j in J)
        if not _smooth(system, nvars):
            logger.debug("rank condition fails for J=%s", J)
            return J
    return None


def _check(T: ToricDatum) -> Tuple[LaurentPolynomial, ...]:
    if not T.is_balanced:
        raise NotBalancedError(f"Regularity is only defined for balanced data, not {T}.")
    return T.initial_forms()


def is_regular(T: ToricDatum) -> bool:
    if T.is_trivial:
        return True
    return singular_subset(_check(T), T.nvars) is None


def find_min_singular_subset(T: ToricDatum) -> Tuple[int, ...]:
    """An inclusion-minimal singular index set (zero-based indices into ``T.polys``)."""
    if T.is_trivial:
        raise IsRegularError("A trivial toric datum is regular.")
    J = singular_subset(_check(T), T.nvars)
    if J is None:
        raise IsRegularError(f"{T} is regular.")
    return J
