"""Compositions of complete bipartite graphs and connected bipartite graph counts.

``C(K_{m,n}) = sum_{i=1}^{m+1} a[m][i] * i**n``, where the integer array ``a``
is built either from Stirling numbers or from a two-term recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from graphcomp.combinatorics import binomial, stirling_row
from graphcomp.egf import Egf

__all__ = [
    "ATable",
    "a_row_stirling",
    "a_table_stirling",
    "a_table_recurrence",
    "rho_row",
    "count_bipartite",
    "count_bipartite_via_egf",
    "connected_bipartite_count",
    "bipartite_connected_indicator",
]


@dataclass(frozen=True)
class ATable:
    """Rows ``a[m] = (a_{m,0}, ..., a_{m,m+1})`` for ``m = 0..max_row``."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, m: int) -> tuple[int, ...]:
        return self.rows[m]

    def entry(self, m: int, i: int) -> int:
        """``a_{m,i}``, zero for ``i`` outside ``0..m+1``."""
        row = self.rows[m]
        return row[i] if 0 <= i < len(row) else 0

    def __len__(self) -> int:
        return len(self.rows)


def a_row_stirling(m: int) -> tuple[int, ...]:
    """Row ``m`` from ``a_{m,i} = sum_k C(k-1, i-1) (-1)^{k-i} S(m+1, k)``."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    s = stirling_row(m + 1)
    row = [0] * (m + 2)
    for i in range(1, m + 2):
        row[i] = sum(
            (-1 if (k - i) & 1 else 1) * binomial(k - 1, i - 1) * s[k] for k in range(i, m + 2)
        )
    return tuple(row)


def a_table_stirling(max_row: int) -> ATable:
    if max_row < 0:
        raise ValueError(f"max_row must be non-negative, got {max_row}")
    return ATable(tuple(a_row_stirling(m) for m in range(max_row + 1)))


def a_table_recurrence(max_row: int) -> ATable:
    """Build the table from
    ``a_{m,n} = sum_{i=0}^{m-1} C(m-1,i) a_{m-1-i,n-1} - sum_{i=1}^{m-1} C(m-1,i) a_{m-1-i,n}``
    with ``a_{0,1} = 1`` and ``a_{m,0} = 0``.
    """
    if max_row < 0:
        raise ValueError(f"max_row must be non-negative, got {max_row}")
    rows: list[tuple[int, ...]] = [(0, 1)]

    def a(r: int, j: int) -> int:
        return rows[r][j] if 0 <= j <= r + 1 else 0

    for m in range(1, max_row + 1):
        row = [0] * (m + 2)
        for n in range(1, m + 2):
            total = sum(binomial(m - 1, i) * a(m - 1 - i, n - 1) for i in range(m))
            total -= sum(binomial(m - 1, i) * a(m - 1 - i, n) for i in range(1, m))
            row[n] = total
        rows.append(tuple(row))
    return ATable(tuple(rows))


def _poly_mul_linear(p: list[int], c0: int, c1: int) -> list[int]:
    # p(z) * (c0 + c1 z)
    out = [0] * (len(p) + 1)
    for d, a in enumerate(p):
        out[d] += c0 * a
        out[d + 1] += c1 * a
    return out


def rho_row(m: int) -> tuple[int, ...]:
    """Coefficients of ``rho_m(z) = z * sum_k S(m+1,k) (z-1)^(k-1)`` in powers of ``z``.

    Expanded by Horner's rule in ``(z - 1)``; independent of the closed-form
    coefficient formula used by :func:`a_row_stirling`.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    s = stirling_row(m + 1)
    acc = [s[m + 1]]
    for k in range(m, 0, -1):
        acc = _poly_mul_linear(acc, -1, 1)
        acc[0] += s[k]
    return tuple(_poly_mul_linear(acc, 0, 1))


def count_bipartite(m: int, n: int) -> int:
    """Number of compositions of ``K_{m,n}`` by the closed form."""
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be non-negative, got ({m}, {n})")
    row = a_row_stirling(m)
    return sum(row[i] * pow(i, n) for i in range(1, m + 2))


def bipartite_connected_indicator(index: tuple[int, int]) -> bool:
    """Whether ``K_{m,n}`` is connected: both sides non-empty, or a single vertex."""
    m, n = index
    return (m > 0 and n > 0) or m + n == 1


def count_bipartite_via_egf(m: int, n: int) -> int:
    """Number of compositions of ``K_{m,n}`` as a coefficient of ``exp`` of the connectivity indicator."""
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be non-negative, got ({m}, {n})")
    f = Egf.from_indicator((m, n), bipartite_connected_indicator)
    return f.exp().coefficient((m, n))


def connected_bipartite_count(m: int, n: int) -> int:
    """Connected spanning subgraphs of ``K_{m,n}``, extracted as ``log`` of ``sum 2^{ij}``."""
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be non-negative, got ({m}, {n})")
    if m == 0 and n == 0:
        raise ValueError("connected count is undefined at (0, 0)")
    h = Egf.from_function((m, n), lambda i, j: 1 << (i * j))
    return h.log().coefficient((m, n))
