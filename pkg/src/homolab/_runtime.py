"""Cooperative deadlines for long computations.

Hot loops call check_deadline(); a surrounding ``deadline(seconds)`` block
turns an overrun into DeadlineExceeded.
"""
from __future__ import annotations

import time
from contextlib import contextmanager

_deadline: float | None = None


class DeadlineExceeded(RuntimeError):
    pass


def check_deadline() -> None:
    if _deadline is not None and time.monotonic() > _deadline:
        raise DeadlineExceeded("time limit exceeded")


@contextmanager
def deadline(seconds: float | None):
    global _deadline
    saved = _deadline
    if seconds is not None:
        t = time.monotonic() + seconds
        _deadline = t if saved is None else min(saved, t)
    try:
        yield
    finally:
        _deadline = saved
