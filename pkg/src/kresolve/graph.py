"""Simple undirected graphs, edge-list I/O, and all-pairs BFS distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DisconnectedError(GraphError):
    """Raised at distance-computation time; names one vertex per component."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.representatives = (u, v)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Labels are metadata only and never affect any computation.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        lab = None
        if labels is not None:
            lab = tuple(labels)
            if len(lab) != n:
                raise GraphError("label list length must equal vertex count")
        return Graph(n, tuple(tuple(sorted(s)) for s in adj), lab)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def serialize(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        if self.labels is not None:
            lines += [f"L {i} {lab}" for i, lab in enumerate(self.labels)]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse edge-list format v1 (see Graph.serialize for the emitter)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"non-integer header {line!r}") from None
            if n < 1 or m < 0:
                raise ParseError(line_no, f"invalid header values n={n} m={m}")
            continue
        if line.startswith("L "):
            if len(edges) != m:
                raise ParseError(line_no, "label line before all edges were read")
            parts = line.split(maxsplit=2)
            if len(parts) != 3:
                raise ParseError(line_no, f"malformed label line {line!r}")
            try:
                idx = int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"non-integer label index in {line!r}") from None
            if not 0 <= idx < n:
                raise ParseError(line_no, f"label index {idx} out of range")
            labels[idx] = parts[2]
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer edge endpoints {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"vertex id out of range in {line!r}")
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(line_no, f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise ParseError(0, "empty input")
    if len(edges) != m:
        raise ParseError(0, f"header promised {m} edges, found {len(edges)}")
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(i, "") for i in range(n))
    return Graph.from_edges(n, edges, label_tuple)


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances from all-pairs BFS; entries fit in int16 (n <= ~10^4)."""

    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.d[uv])


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """One BFS per vertex; raises DisconnectedError on disconnected input."""
    n = g.n
    d = np.full((n, n), -1, dtype=np.int16)
    for src in range(n):
        row = d[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in g.adjacency[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    queue.append(w)
        if src == 0:
            unreached = np.flatnonzero(row < 0)
            if unreached.size:
                raise DisconnectedError(0, int(unreached[0]))
    return DistanceMatrix(n, d)
