"""Brute-force ground truth.

Compositions are counted by streaming every set partition of the vertex set
(restricted-growth strings in lexicographic order) and keeping those whose
blocks all induce connected subgraphs. Connected bipartite graphs are counted
by enumerating edge subsets of ``K_{m,n}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from graphcomp.multipartite import PartSpec

__all__ = [
    "Graph",
    "SetPartitionCursor",
    "EdgeListError",
    "CostLimitError",
    "complete_bipartite",
    "complete_multipartite",
    "from_edge_list",
    "is_connected",
    "count_compositions",
    "connected_bipartite_bruteforce",
]

MAX_BRUTEFORCE_EDGES = 20


class EdgeListError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CostLimitError(ValueError):
    """Brute force refused because the enumeration would be too large."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``; ``adj[v]`` is a bitmask of neighbours."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1]

    @property
    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


class SetPartitionCursor:
    """Streams the partitions of ``{0..n-1}`` as restricted-growth strings.

    ``rgs[j]`` is the block label of ``j``; ``rgs[0] == 0`` and
    ``rgs[j] <= 1 + max(rgs[:j])``. Strings come out in lexicographic order.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        self.n = n

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        n = self.n
        if n == 0:
            yield ()
            return
        rgs = [0] * n
        # prefix_max[j] == max(rgs[:j]) for j >= 1
        prefix_max = [0] * n
        while True:
            yield tuple(rgs)
            j = n - 1
            while j > 0 and rgs[j] > prefix_max[j]:
                j -= 1
            if j == 0:
                return
            rgs[j] += 1
            top = max(prefix_max[j], rgs[j])
            for k in range(j + 1, n):
                rgs[k] = 0
                prefix_max[k] = top

    def blocks(self) -> Iterator[list[int]]:
        """Same partitions as lists of vertex bitmasks, one per block."""
        for rgs in self:
            masks = [0] * (max(rgs) + 1 if rgs else 0)
            for v, b in enumerate(rgs):
                masks[b] |= 1 << v
            yield masks


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite(PartSpec((m, n)))


def complete_multipartite(spec: PartSpec | Iterable[int]) -> Graph:
    parts = PartSpec.of(spec).parts
    label = [p for p, a in enumerate(parts) for _ in range(a)]
    total = len(label)
    return Graph.from_edges(
        total, ((u, v) for u in range(total) for v in range(u + 1, total) if label[u] != label[v])
    )


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    First non-blank, non-comment line: vertex count. Every later one: ``u v``.
    Lines starting with ``#`` are comments; duplicate edges collapse.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise EdgeListError(lineno, f"expected a vertex count, got {line!r}")
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise EdgeListError(lineno, f"expected two vertex indices, got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise EdgeListError(lineno, f"vertex index out of range for {n} vertices: {line!r}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise EdgeListError(0, "missing vertex count")
    return Graph.from_edges(n, edges)


def _mask_connected(g: Graph, block: int) -> bool:
    start = block & -block
    seen = frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nbrs = g.adj[low.bit_length() - 1] & block & ~seen
        seen |= nbrs
        frontier |= nbrs
    return seen == block


def is_connected(g: Graph, block: Iterable[int] | int) -> bool:
    """Whether the subgraph induced on ``block`` (vertex iterable or bitmask) is connected."""
    if not isinstance(block, int):
        mask = 0
        for v in block:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
            mask |= 1 << v
        block = mask
    if block == 0:
        raise ValueError("empty block")
    return _mask_connected(g, block)


def count_compositions(g: Graph) -> int:
    """Number of partitions of ``V(g)`` whose blocks all induce connected subgraphs."""
    cache: dict[int, bool] = {}
    count = 0
    for masks in SetPartitionCursor(g.n).blocks():
        for b in masks:
            ok = cache.get(b)
            if ok is None:
                ok = cache[b] = _mask_connected(g, b)
            if not ok:
                break
        else:
            count += 1
    return count


def connected_bipartite_bruteforce(m: int, n: int, max_edges: int = MAX_BRUTEFORCE_EDGES) -> int:
    """Edge subsets of ``K_{m,n}`` whose spanning graph on all ``m + n`` vertices is connected."""
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be non-negative, got ({m}, {n})")
    if m == 0 and n == 0:
        raise ValueError("connected count is undefined at (0, 0)")
    if m * n > max_edges:
        raise CostLimitError(f"K_{{{m},{n}}} has {m * n} edges; brute force limited to {max_edges}")
    if m * n == 0:
        return 1 if m + n == 1 else 0
    edges = [(u, m + v) for u in range(m) for v in range(n)]
    full = (1 << (m + n)) - 1
    count = 0
    for subset in range(1 << len(edges)):
        adj = [0] * (m + n)
        s = subset
        while s:
            low = s & -s
            u, v = edges[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            s ^= low
        if _mask_connected(Graph(m + n, tuple(adj)), full):
            count += 1
    return count
