"""Deterministic parallel map.

LIFTKIT_THREADS caps the worker count (default 1: sequential).  Results are
returned in input order regardless of scheduling, so any output assembled
from them is independent of the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("LIFTKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(fn, items):
    items = list(items)
    workers = min(thread_count(), len(items)) or 1
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
