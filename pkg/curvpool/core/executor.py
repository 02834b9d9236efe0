"""
Per-graph fan-out.

Work items are independent pure functions of immutable graphs, so they run in
a process pool; results come back in input order whatever the schedule.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from .logger import get_logger

T = TypeVar("T")
R = TypeVar("R")

logger = get_logger("curvpool.executor")


def map_graphs(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """Apply a picklable top-level `fn` to every item with up to `threads` workers."""
    workers = max(1, min(threads, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("fan out", items=len(items), workers=workers, chunksize=chunksize)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
