"""The reduction stage: turn the initial toric datum into a disjoint family of regular ones.

The work list is processed last-in first-out. Every popped datum is simplified and then either
dropped (trivial), balanced, stored (regular) or reduced; the union of the cones on the work
list and the regular list always stays equal to the initial cone.
"""

import logging
from collections import Counter
from typing import IO, List, Optional

from topzeta.engine.config import RunConfig
from topzeta.errors import ReductionFailure
from topzeta.helpers import dump_line, progress_bar
from topzeta.toric import ToricDatum, is_regular, reduce, simplify

__all__ = ["stage1"]

logger = logging.getLogger(__name__)


def _trace(fp: Optional[IO[str]], event: str, datum: ToricDatum, **extra) -> None:
    if fp is not None:
        dump_line({"event": event, "datum": datum, **extra}, fp)


def stage1(
    T0: ToricDatum, cfg: Optional[RunConfig] = None, trace: Optional[IO[str]] = None
) -> List[ToricDatum]:
    """The regular toric data; raises :py:class:`~topzeta.errors.ReductionFailure`."""
    if cfg is None:
        cfg = RunConfig(jobs=1)

    unprocessed: List[ToricDatum] = [] if T0.is_trivial else [T0]
    regular: List[ToricDatum] = []
    logger.info("Stage I: %d variables, %d polynomials", T0.nvars, len(T0.polys))

    with progress_bar(cfg.verbose, desc="reduce", unit="data") as bar:
        while unprocessed:
            T = simplify(unprocessed.pop())
            if T.is_trivial:
                _trace(trace, "trivial", T)
            elif not T.is_balanced:
                pieces = [P for P in T.balance() if not P.is_trivial]
                _trace(trace, "balance", T, pieces=len(pieces))
                unprocessed.extend(reversed(pieces))
            elif is_regular(T):
                _trace(trace, "regular", T)
                regular.append(T)
            else:
                try:
                    pieces = [P for P in reduce(T, cfg.depth_cap) if not P.is_trivial]
                except ReductionFailure as e:
                    _trace(trace, "fail", T, reason=e.reason)
                    if e.datum is None:
                        e.datum = T
                    raise
                _trace(trace, "reduce", T, pieces=len(pieces))
                unprocessed.extend(reversed(pieces))

            bar.update(1)
            depths = Counter(P.depth for P in unprocessed)
            bar.set_postfix(
                unprocessed=len(unprocessed),
                regular=len(regular),
                depths=dict(sorted(depths.items())),
            )

    logger.info("Stage I: %d regular toric data", len(regular))
    return regular
