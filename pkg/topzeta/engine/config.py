import os
from dataclasses import dataclass, field
from typing import Optional

from simple_parsing import choice

from topzeta.algebra.input import Mode
from topzeta.toric import DEFAULT_DEPTH_CAP

__all__ = ["EULER_CACHE_ENV", "RunConfig"]

EULER_CACHE_ENV = "ZETA_EULER_CACHE"


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _default_euler_cache() -> Optional[str]:
    return os.environ.get(EULER_CACHE_ENV) or None


@dataclass
class RunConfig:
    mode: Optional[str] = choice("subalgebra", "ideal", "submodule", default=None)
    """What to count; overrides the mode given in the input document."""
    depth_cap: int = DEFAULT_DEPTH_CAP
    """How many weight-increasing reductions a toric datum may go through."""
    jobs: int = field(default_factory=_default_jobs)
    """Number of worker processes for the evaluation stage."""
    trace: Optional[str] = None
    """Append one JSON line per reduction step to this file."""
    euler_cache: Optional[str] = field(default_factory=_default_euler_cache)
    """SQLite file memoizing Euler characteristics (default: $ZETA_EULER_CACHE)."""
    seed: int = 0
    verbose: bool = False
    """Show progress bars on stderr."""
    check_magic: bool = False
    """Also compute the zeta function after adding an abelian summand and compare magic values."""

    def __post_init__(self):
        if self.depth_cap < 1:
            raise ValueError(f"depth_cap must be at least 1, not {self.depth_cap}.")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, not {self.jobs}.")
        if self.mode is not None:
            Mode(self.mode)

    @property
    def run_mode(self) -> Optional[Mode]:
        return None if self.mode is None else Mode(self.mode)
