"""Deterministic fan-out of independent work chunks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def map_chunks(fn: Callable[[T], R], chunks: Iterable[T], jobs: int = 1) -> list[R]:
    """``[fn(c) for c in chunks]``, optionally across worker processes.

    Results come back in input order whatever the scheduling, so merged
    output is identical for every ``jobs`` value.
    """
    chunks = list(chunks)
    if jobs <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
        return list(pool.map(fn, chunks))
