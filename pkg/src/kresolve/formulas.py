"""Closed-form dimension values and theoretical bound evaluation."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class TreeParams:
    a: int  # leaves
    b: int  # branching vertices with >= 1 attached ray
    c: int  # branching vertices with exactly 1 attached ray
    is_path: bool


@dataclass(frozen=True)
class BoundsResult:
    dim_value: int
    t: int
    ft_upper: int
    k_upper: int
    jt_low: int
    jt_high: int


def _is_tree(g: Graph) -> bool:
    if g.m != g.n - 1:
        return False
    # connectivity via one traversal
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def tree_params(g: Graph) -> TreeParams:
    if g.n < 2 or not _is_tree(g):
        raise ValueError("input is not a tree on >= 2 vertices")
    degs = [g.degree(v) for v in range(g.n)]
    if max(degs) <= 2:
        return TreeParams(a=2 if g.n > 2 else 0, b=0, c=0, is_path=True)
    a = sum(1 for d in degs if d == 1)
    b = c = 0
    for v in range(g.n):
        if degs[v] <= 2:
            continue
        # count rays: walks through degree-2 interior vertices ending in a leaf
        rays = 0
        for w in g.adjacency[v]:
            prev, cur = v, w
            while degs[cur] == 2:
                nxt = next(x for x in g.adjacency[cur] if x != prev)
                prev, cur = cur, nxt
            if degs[cur] == 1:
                rays += 1
        if rays >= 1:
            b += 1
            if rays == 1:
                c += 1
    return TreeParams(a=a, b=b, c=c, is_path=False)


def tree_invariants(g: Graph) -> tuple[TreeParams, int, int]:
    """(params, dim, ftdim) for a tree: dim = a - b, ftdim = a - c,
    paths being the special case dim = 1, ftdim = 2."""
    p = tree_params(g)
    if p.is_path:
        return p, 1, 2
    return p, p.a - p.b, p.a - p.c


def multipartite_invariants(parts: list[int]) -> tuple[int, int]:
    """(dim, ftdim) of the complete multipartite graph with the given parts."""
    if len(parts) < 2 or any(x < 1 for x in parts):
        raise ValueError("need >= 2 parts, each of size >= 1")
    n = sum(parts)
    p = len(parts)
    q = sum(1 for x in parts if x == 1)
    dim = n - p if q == 0 else n - p + q - 1
    ftdim = n - 1 if q == 1 else n
    return dim, ftdim


def path_dim_k(n: int, k: int) -> int:
    """dim_k of the n-vertex path: k for k <= 2, else k + 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < k + 2:
        raise ValueError(f"formula requires n >= k + 2, got n={n}, k={k}")
    return k if k <= 2 else k + 1


def theoretical_bounds(dim_value: int, t: int) -> BoundsResult:
    """Exact big-integer evaluation of the exponential upper bounds and the
    extremal-value interval t + 2^(t-1) .. t(1 + 2*5^(t-1))."""
    if dim_value < 1 or t < 1:
        raise ValueError("inputs must be >= 1")
    upper = dim_value * (1 + 2 * 5 ** (dim_value - 1))
    return BoundsResult(
        dim_value=dim_value,
        t=t,
        ft_upper=upper,
        k_upper=upper,
        jt_low=t + 2 ** (t - 1),
        jt_high=t * (1 + 2 * 5 ** (t - 1)),
    )
