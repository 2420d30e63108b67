"""Bitmask-range partitioning of brute-force enumeration across worker processes"""
import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")

CHUNKS_PER_WORKER = 4


def split_range(total: int, chunks: int) -> list[tuple[int, int]]:
    """Contiguous [start, stop) ranges covering [0, total), in ascending order"""
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    bounds = []
    start = 0
    for index in range(chunks):
        stop = start + step + (1 if index < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def run_partitioned(
    worker: Callable[[int, int, int, int], T],
    n: int,
    target: int,
    total: int,
    workers: int,
) -> list[T]:
    """
    Evaluate worker(n, target, start, stop) over a split of [0, total)

    Returns the per-chunk results in range order, so merging them is
    deterministic. A single worker runs in-process over the whole range.
    """
    if workers <= 1:
        return [worker(n, target, 0, total)]

    bounds = split_range(total, workers * CHUNKS_PER_WORKER)
    logger.info(
        "Partitioned enumeration",
        extra={"n": n, "workers": workers, "chunks": len(bounds), "digraphs": total},
    )
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(
            executor.map(
                worker,
                [n] * len(bounds),
                [target] * len(bounds),
                [start for start, _ in bounds],
                [stop for _, stop in bounds],
            )
        )
