"""Compositions of complete multipartite graphs ``K_{a1,...,an}``.

The count is the ``(a1, ..., an)`` coefficient of ``exp(f)`` where ``f`` is the
n-variable connectivity indicator of complete multipartite graphs. The EGF of
that indicator is ``y1...yn - sum y_i + (n - 1) + sum x_i`` with ``y_i = e^{x_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from graphcomp.egf import Egf

__all__ = ["PartSpec", "count_multipartite", "multipartite_edge_count", "multipartite_connected_indicator"]


@dataclass(frozen=True)
class PartSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if not parts:
            raise ValueError("a complete multipartite graph needs at least one part")
        if any(a < 0 for a in parts):
            raise ValueError(f"part sizes must be non-negative, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, spec: PartSpec | Iterable[int]) -> PartSpec:
        return spec if isinstance(spec, PartSpec) else cls(tuple(spec))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def multipartite_connected_indicator(index: Sequence[int]) -> bool:
    """True iff ``K_index`` is connected: two or more non-empty parts, or a single vertex."""
    return sum(1 for a in index if a > 0) >= 2 or sum(index) == 1


def count_multipartite(spec: PartSpec | Iterable[int]) -> int:
    spec = PartSpec.of(spec)
    f = Egf.from_indicator(spec.parts, multipartite_connected_indicator)
    return f.exp().coefficient(spec.parts)


def multipartite_edge_count(spec: PartSpec | Iterable[int]) -> int:
    """``sum_{i<j} a_i a_j``, computed as ``(total^2 - sum a_i^2) / 2``."""
    parts = PartSpec.of(spec).parts
    total = sum(parts)
    return (total * total - sum(a * a for a in parts)) // 2
