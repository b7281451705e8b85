"""Deterministic work-pool helper.

Results always come back in submission order, so output never depends on
the scheduling of workers; ``jobs=1`` runs inline.  Workers are forked, so
process-wide memo caches that are already warm carry over for free.
"""

from __future__ import annotations

import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int) -> list[R]:
    """Order-preserving map; inline when jobs <= 1 or there is one item."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    try:
        context = multiprocessing.get_context("fork")
    except ValueError:
        context = multiprocessing.get_context()
    workers = min(jobs, len(items))
    with ProcessPoolExecutor(max_workers=workers, mp_context=context) as pool:
        return list(pool.map(fn, items))
