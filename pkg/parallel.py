"""
Partitioned execution of outer summation loops.

Chunks are evaluated in-process for a single worker, otherwise on a
process pool. Results always come back in chunk order, so totals and
merged lists do not depend on the worker count.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

R = TypeVar("R")

logger = logging.getLogger(__name__)


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """
    Contiguous inclusive sub-ranges covering [lo, hi]; empty ranges are
    dropped, so fewer than `parts` pieces may come back.
    """
    if hi < lo:
        return []
    parts = max(1, parts)
    size = hi - lo + 1
    step, extra = divmod(size, parts)
    pieces = []
    start = lo
    for index in range(parts):
        length = step + (1 if index < extra else 0)
        if length == 0:
            continue
        pieces.append((start, start + length - 1))
        start += length
    return pieces


def run_partitioned(func: Callable[..., R], chunks: Iterable[Sequence], workers: int = 1) -> list[R]:
    """
    Evaluate func(*chunk) for every chunk, in order.

    :pre: func is a module level function when workers > 1 (it is pickled).
    """
    chunks = [tuple(chunk) for chunk in chunks]
    if workers <= 1 or len(chunks) <= 1:
        return [func(*chunk) for chunk in chunks]
    # partials carry the target under .func
    name = getattr(func, "func", func).__name__
    logger.debug("dispatching %d chunks of %s to %d workers", len(chunks), name, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, *chunk) for chunk in chunks]
        return [future.result() for future in futures]


def sum_partitioned(func: Callable[[int, int], int], lo: int, hi: int, workers: int = 1) -> int:
    """ Sum func over the inclusive sub-ranges of [lo, hi]. """
    return sum(run_partitioned(func, split_range(lo, hi, max(workers, 1)), workers))
