"""Collects one result line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES: dict = {}


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    """Time a block; record PASS only if it finishes without error inside ``limit`` seconds."""
    info: dict = {"detail": ""}
    start = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and limit is not None and elapsed > limit:
            ok = False
            info["detail"] += " (over the %.0f s limit)" % limit
        line = "criterion %2d %-40s %s  %6.1f s  %s" % (
            number, title, "PASS" if ok else "FAIL", elapsed, info["detail"].strip())
        LINES[number] = line
        print(line)
    if limit is not None and elapsed > limit:
        raise AssertionError("criterion %d took %.1f s (limit %.0f s)" % (number, elapsed, limit))
