import sys
from contextlib import contextmanager
from typing import Iterable, Iterator, Optional, TypeVar

__all__ = ["is_notebook", "wrap_progress", "progress_bar"]

_T = TypeVar("_T")


def is_notebook() -> bool:
    try:
        shell = get_ipython().__class__.__name__  # type: ignore[name-defined]
        return shell == "ZMQInteractiveShell"
    except NameError:
        return False


def _tqdm_class():
    if is_notebook():
        from tqdm.notebook import tqdm
    else:
        from tqdm.std import tqdm
    return tqdm


def wrap_progress(vals: Iterable[_T], verbose: bool, **kwargs) -> Iterable[_T]:
    if verbose:
        return _tqdm_class()(vals, leave=True, file=sys.stderr, **kwargs)
    return vals


class _SilentBar:
    """Stands in for a tqdm bar when progress output is disabled."""

    def update(self, n: int = 1) -> None:
        pass

    def set_postfix(self, *args, **kwargs) -> None:
        pass

    def set_description(self, *args, **kwargs) -> None:
        pass


@contextmanager
def progress_bar(verbose: bool, total: Optional[int] = None, **kwargs) -> Iterator:
    """A manually updated progress bar, e.g. for work lists of unknown length."""
    if not verbose:
        yield _SilentBar()
        return

    bar = _tqdm_class()(total=total, leave=True, file=sys.stderr, **kwargs)
    try:
        yield bar
    finally:
        bar.close()
