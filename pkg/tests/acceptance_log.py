"""Collects one line per acceptance criterion for the end-of-run summary."""
import time
from contextlib import contextmanager

LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str, seconds: float) -> None:
    LINES.append(f"criterion {criterion:<3} {'PASS' if ok else 'FAIL'}  {detail} ({seconds:.2f} s)")


@contextmanager
def timed():
    box = {}
    start = time.perf_counter()
    yield box
    box["seconds"] = time.perf_counter() - start
