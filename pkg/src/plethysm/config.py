"""Process-wide worker settings.

The front end stays single-threaded; core routines that map over
independent weight queries consult this cap.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

_THREADS = 1

T = TypeVar("T")
R = TypeVar("R")


def set_threads(n: int) -> None:
    global _THREADS
    _THREADS = max(1, int(n))


def get_threads() -> int:
    return _THREADS


def parallel_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Map over independent items, threaded when the cap allows."""
    if _THREADS <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(_THREADS, len(items))) as pool:
        return list(pool.map(fn, items))
