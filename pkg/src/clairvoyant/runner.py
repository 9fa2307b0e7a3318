"""Replica scheduling for Monte Carlo runs.

Work is split into contiguous replica ranges, one per worker.  Because every
replica draws from its own counter-based stream, the concatenated result is
a pure function of (master seed, replica count) and does not depend on the
worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable

import numpy as np

ChunkFn = Callable[[int, int], np.ndarray]


def chunk_bounds(replicas: int, workers: int) -> list[tuple[int, int]]:
    if replicas < 1:
        raise ValueError("replicas must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    workers = min(workers, replicas)
    base, extra = divmod(replicas, workers)
    bounds = []
    lo = 0
    for w in range(workers):
        hi = lo + base + (1 if w < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def run_chunked(fn: ChunkFn, replicas: int, workers: int = 1) -> np.ndarray:
    """Evaluate fn over [0, replicas), possibly in parallel, in index order."""
    bounds = chunk_bounds(replicas, workers)
    if len(bounds) == 1:
        return np.asarray(fn(*bounds[0]))
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        parts = list(pool.map(fn, *zip(*bounds)))
    return np.concatenate([np.asarray(p) for p in parts])
