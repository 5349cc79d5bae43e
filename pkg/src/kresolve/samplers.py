"""Seeded random graph samplers for the verification suites."""

from __future__ import annotations

import random

from .graph import Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random parent array: vertex i > 0 attaches to a uniform j < i."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random,
                           max_tries: int = 1000) -> Graph:
    """Edge-probability model with rejection of disconnected samples."""
    for _ in range(max_tries):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if _connected(g):
            return g
    raise RuntimeError(f"no connected sample in {max_tries} tries (n={n}, p={p})")


def _connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
