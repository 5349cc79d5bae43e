"""Deterministic generators for the extremal graph families.

Vertex numbering convention for the code-clique families: the 2^t binary
codes occupy ids 0..2^t-1 (id = code value, coordinate 1 = leftmost bit),
apex vertices follow in order v_1..v_t (or row-major v_{1,1}..v_{t,k}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import to_bitset
from .graph import Graph


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    family: str
    params: dict

    @property
    def labels(self):
        return self.graph.labels


def _code_label(j: int, t: int) -> str:
    return format(j, f"0{t}b")


def _code_has_one(j: int, i: int, t: int) -> bool:
    """Coordinate i (1-based, leftmost first) of the length-t code for j."""
    return j >> (t - i) & 1 == 1


def gen_mt(t: int) -> LabeledGraph:
    """Clique on all length-t binary codes plus t apex vertices; apex i is
    adjacent to exactly the codes with 1 at coordinate i."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    codes = 1 << t
    n = codes + t
    edges = [(u, v) for u in range(codes) for v in range(u + 1, codes)]
    for i in range(1, t + 1):
        vi = codes + i - 1
        edges += [(j, vi) for j in range(codes) if _code_has_one(j, i, t)]
    labels = [_code_label(j, t) for j in range(codes)]
    labels += [f"v_{i}" for i in range(1, t + 1)]
    return LabeledGraph(Graph.from_edges(n, edges, labels), "mt", {"t": t})


def gen_mtk(t: int, k: int) -> LabeledGraph:
    """Code clique plus a t-clique-by-k-clique product of apexes v_{i,j};
    v_{i,j} is adjacent to the codes with 1 at coordinate i."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    codes = 1 << t
    n = codes + k * t
    edges = [(u, v) for u in range(codes) for v in range(u + 1, codes)]

    def vid(i: int, j: int) -> int:  # 1-based (i, j), row-major
        return codes + (i - 1) * k + (j - 1)

    for i in range(1, t + 1):
        for j in range(1, k + 1):
            u = vid(i, j)
            # same row (fixed i): clique over j
            edges += [(u, vid(i, j2)) for j2 in range(j + 1, k + 1)]
            # same column (fixed j): clique over i
            edges += [(u, vid(i2, j)) for i2 in range(i + 1, t + 1)]
            edges += [(c, u) for c in range(codes) if _code_has_one(c, i, t)]
    labels = [_code_label(j, t) for j in range(codes)]
    labels += [f"v_{i},{j}" for i in range(1, t + 1) for j in range(1, k + 1)]
    return LabeledGraph(Graph.from_edges(n, edges, labels), "mtk", {"t": t, "k": k})


def gen_complete_multipartite(parts: list[int]) -> LabeledGraph:
    if len(parts) < 2:
        raise ValueError("need at least 2 parts for a connected graph")
    if any(p < 1 for p in parts):
        raise ValueError("every part must have at least 1 vertex")
    n = sum(parts)
    part_of = []
    for idx, p in enumerate(parts):
        part_of += [idx] * p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if part_of[u] != part_of[v]]
    g = Graph.from_edges(n, edges)
    return LabeledGraph(g, "multipartite", {"parts": list(parts)})


def gen_path(n: int) -> LabeledGraph:
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return LabeledGraph(g, "path", {"n": n})


def gen_spine_tree(leaf_counts: list[int]) -> LabeledGraph:
    """Path on d spine vertices, spine vertex i carrying leaf_counts[i]
    pendant leaves (each >= 2)."""
    if not leaf_counts:
        raise ValueError("need at least one spine vertex")
    if any(c < 2 for c in leaf_counts):
        raise ValueError("each spine vertex needs at least 2 leaves")
    d = len(leaf_counts)
    edges = [(i, i + 1) for i in range(d - 1)]
    nxt = d
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    return LabeledGraph(g, "spine", {"leaf_counts": list(leaf_counts)})


def parity_ft_set(t: int) -> int:
    """For gen_mt(t): all apexes plus the even-parity codes; a 2-resolving
    set of size t + 2^(t-1)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    codes = 1 << t
    members = [j for j in range(codes) if j.bit_count() % 2 == 0]
    members += list(range(codes, codes + t))
    return to_bitset(members)
