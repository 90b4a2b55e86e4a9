import time
from contextlib import contextmanager
from typing import Dict, Iterator, Optional

__all__ = ["Timer"]


class Timer:
    """Wall-clock seconds per named phase.

    A phase that raises is still timed, so failed runs report how far they got.
    """

    def __init__(self, timings: Optional[Dict[str, float]] = None) -> None:
        self.timings: Dict[str, float] = {} if timings is None else timings

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - start

    @property
    def total(self) -> float:
        return sum(self.timings.values())
