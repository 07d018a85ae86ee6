"""Order-preserving parallel map used by the windowing, bootstrap and study runners."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``[func(x) for x in items]``, optionally spread over worker processes.

    Results come back in input order, so callers see the same output for any
    worker count as long as ``func`` depends only on its argument.
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))
