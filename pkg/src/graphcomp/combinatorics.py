"""Exact integer tables: binomials, factorials, Stirling numbers of the second kind, Bell numbers.

Tables grow on demand by integer recurrences and are shared between callers.
Every returned value is a plain Python ``int``.
"""

from __future__ import annotations

import math
import threading

__all__ = ["binomial", "factorial", "stirling2", "stirling_row", "bell", "pascal_row"]

# Rows of Pascal's triangle are cached up to this size; above it math.comb is
# used so a single large query does not materialise a quadratic table.
PASCAL_CACHE_LIMIT = 1024

_lock = threading.Lock()
_pascal: list[tuple[int, ...]] = [(1,)]
_stirling: list[tuple[int, ...]] = [(1,)]


def _extend(table: list[tuple[int, ...]], n: int, step) -> tuple[int, ...]:
    if n < len(table):
        return table[n]
    with _lock:
        while len(table) <= n:
            table.append(step(table[-1], len(table)))
    return table[n]


def _next_pascal(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    return (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)


def _next_stirling(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # S(n, k) = k S(n-1, k) + S(n-1, k-1); prev has length n.
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
    return tuple(row)


def pascal_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle, ``(C(n,0), ..., C(n,n))``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _extend(_pascal, n, _next_pascal)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0 and any integer k; zero when k is outside [0, n]."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    if n <= PASCAL_CACHE_LIMIT:
        return pascal_row(n)[k]
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def stirling_row(n: int) -> tuple[int, ...]:
    """``(S(n,0), ..., S(n,n))``, Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _extend(_stirling, n, _next_stirling)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k non-empty blocks."""
    if n < 0 or k < 0:
        raise ValueError(f"arguments must be non-negative, got ({n}, {k})")
    if k > n:
        return 0
    return stirling_row(n)[k]


def bell(n: int) -> int:
    """Total number of set partitions of an n-set."""
    return sum(stirling_row(n))
