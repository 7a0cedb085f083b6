"""Solutions of x^2 - N y^2 = 1 from the continued fraction of sqrt(N)."""

from __future__ import annotations

import math
from typing import Iterator


def sqrt_continued_fraction(N: int) -> tuple[int, list[int]]:
    """(a0, period) with sqrt(N) = [a0; period, period, ...]."""
    a0 = math.isqrt(N)
    if a0 * a0 == N:
        raise ValueError(f"{N} is a perfect square")
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = a * q - m
        q = (N - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, period


def fundamental_solution(N: int) -> tuple[int, int]:
    """Smallest x, y > 0 with x^2 - N y^2 = 1."""
    a0, period = sqrt_continued_fraction(N)
    L = len(period)
    terms = period[:-1] if L % 2 == 0 else period + period[:-1]
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for a in terms:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    assert h * h - N * k * k == 1
    return h, k


def pell_solutions(N: int) -> Iterator[tuple[int, int]]:
    """All positive solutions in increasing order."""
    x1, y1 = fundamental_solution(N)
    x, y = x1, y1
    while True:
        yield x, y
        x, y = x * x1 + N * y * y1, x * y1 + y * x1
