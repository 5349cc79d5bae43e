"""Minimum k-resolving set computation.

Cast as set multicover: every vertex pair demands k distinguishers, every
vertex covers the pairs it distinguishes. Exact search is branch-and-bound
with forced-vertex propagation, a greedy incumbent, and an admissible
lower bound; a subset-enumeration oracle is kept for cross-checking.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .bitset import from_bitset, iter_bits, to_bitset
from .graph import Graph, all_pairs_distances
from .metric import PairDistinguishers, distinguisher_table, kappa

OPTIMAL = "optimal"
FEASIBLE_UB = "feasible-upper-bound"
INFEASIBLE = "infeasible"

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_TIME_BUDGET = 600.0


@dataclass
class Budget:
    max_nodes: int = DEFAULT_NODE_BUDGET
    max_seconds: float = DEFAULT_TIME_BUDGET


@dataclass
class SolveResult:
    set: int  # vertex bitset
    size: int
    status: str
    nodes_explored: int = 0
    elapsed: float = 0.0
    lower_bound_at_exit: int = 0

    def vertices(self) -> list[int]:
        return from_bitset(self.set)


@dataclass
class BoundCertificate:
    """Vertex-disjoint pairs with additive endpoint demands.

    Any k-resolving S needs k distinguishers of each pair (x, y); at most
    |D(x,y) \\ {x,y}| of them lie off the pair, so S contains at least
    demand = max(0, k - |D \\ {x,y}|) of the endpoints. Disjointness makes
    the demands sum to a lower bound on dim_k.
    """

    k: int
    pairs: list[tuple[int, int]] = field(default_factory=list)
    demands: list[int] = field(default_factory=list)
    bound: int = 0


def preprocess(pd: PairDistinguishers, k: int) -> tuple[int, bool]:
    """Forced vertices and feasibility.

    A pair with exactly k distinguishers needs all of them, so their union
    is contained in every k-resolving set. Infeasible iff k > kappa.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    forced = 0
    for m in pd.masks:
        c = m.bit_count()
        if c < k:
            return 0, False
        if c == k:
            forced |= m
    return forced, True


def _residual_demands(pd: PairDistinguishers, S: int, k: int) -> list[int]:
    return [max(0, k - (S & m).bit_count()) for m in pd.masks]


def solve_greedy(pd: PairDistinguishers, k: int) -> SolveResult:
    """Forced seed plus repeated max-residual-coverage vertex (ties: lowest id)."""
    start = time.perf_counter()
    forced, feasible = preprocess(pd, k)
    if not feasible:
        return SolveResult(0, 0, INFEASIBLE, elapsed=time.perf_counter() - start)
    S = forced
    res = _residual_demands(pd, S, k)
    while True:
        deficient = [i for i, r in enumerate(res) if r > 0]
        if not deficient:
            break
        best_v, best_cov = -1, 0
        for v in range(pd.n):
            if S >> v & 1:
                continue
            bit = 1 << v
            cov = sum(1 for i in deficient if pd.masks[i] & bit)
            if cov > best_cov:
                best_v, best_cov = v, cov
        bit = 1 << best_v
        S |= bit
        for i in deficient:
            if pd.masks[i] & bit:
                res[i] -= 1
    return SolveResult(S, S.bit_count(), FEASIBLE_UB,
                       elapsed=time.perf_counter() - start)


def lower_bound_pair_slack(pd: PairDistinguishers, k: int) -> BoundCertificate:
    """Greedy vertex-disjoint pair selection in decreasing demand order."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    cert = BoundCertificate(k=k)
    scored = []
    for (x, y), m in zip(pd.pairs, pd.masks):
        off_pair = (m & ~((1 << x) | (1 << y))).bit_count()
        demand = max(0, k - off_pair)
        if demand > 0:
            scored.append((-demand, x, y))
    scored.sort()
    used = 0
    for neg_demand, x, y in scored:
        if used >> x & 1 or used >> y & 1:
            continue
        used |= (1 << x) | (1 << y)
        cert.pairs.append((x, y))
        cert.demands.append(-neg_demand)
    cert.bound = sum(cert.demands)
    return cert


def _node_lower_bound(masks: list[int], pairs: tuple[tuple[int, int], ...],
                      residual: list[int], deficient: list[int],
                      avail: int, n: int) -> int:
    """Admissible bound on additional vertices: max of disjoint pair slack
    and ceil(total residual demand / best single-vertex coverage)."""
    if not deficient:
        return 0
    scored = []
    total = 0
    for i in deficient:
        r = residual[i]
        total += r
        x, y = pairs[i]
        off = (masks[i] & avail & ~((1 << x) | (1 << y))).bit_count()
        need = r - off
        if need > 0:
            scored.append((-need, x, y))
    slack = 0
    if scored:
        scored.sort()
        used = 0
        for neg_need, x, y in scored:
            if used >> x & 1 or used >> y & 1:
                continue
            used |= (1 << x) | (1 << y)
            slack += -neg_need
    best_cov = 0
    for v in iter_bits(avail):
        bit = 1 << v
        cov = sum(1 for i in deficient if masks[i] & bit)
        if cov > best_cov:
            best_cov = cov
    density = -(-total // best_cov) if best_cov else total
    return max(slack, density)


def solve_exact(pd: PairDistinguishers, k: int,
                budget: Budget | None = None) -> SolveResult:
    """Branch-and-bound minimum k-resolving set.

    Branches include/exclude the lowest-id available vertex of a maximum-
    deficit pair; pairs whose residual demand equals their remaining
    coverage force all their available distinguishers. Deterministic.
    """
    start = time.perf_counter()
    if budget is None:
        budget = Budget()
    forced, feasible = preprocess(pd, k)
    if not feasible:
        return SolveResult(0, 0, INFEASIBLE, elapsed=time.perf_counter() - start)

    greedy = solve_greedy(pd, k)
    best_set, best_size = greedy.set, greedy.size
    masks = list(pd.masks)
    pairs = pd.pairs
    n = pd.n
    state = {"nodes": 0, "budget_hit": False}
    deadline = start + budget.max_seconds

    def recurse(chosen: int, excluded: int) -> None:
        nonlocal best_set, best_size
        state["nodes"] += 1
        if state["nodes"] >= budget.max_nodes or time.perf_counter() > deadline:
            state["budget_hit"] = True
            return
        if state["budget_hit"]:
            return
        # propagate: a pair whose demand equals its remaining coverage
        # forces every available distinguisher it has left
        while True:
            avail = ~(chosen | excluded) & ((1 << n) - 1)
            residual = []
            deficient = []
            newly_forced = 0
            for i, m in enumerate(masks):
                r = k - (chosen & m).bit_count()
                residual.append(r if r > 0 else 0)
                if r > 0:
                    a = (m & avail).bit_count()
                    if r > a:
                        return  # pair can no longer reach demand k
                    if r == a:
                        newly_forced |= m & avail
                    deficient.append(i)
            if newly_forced:
                chosen |= newly_forced
                if chosen.bit_count() >= best_size:
                    return
                continue
            break
        size = chosen.bit_count()
        if not deficient:
            if size < best_size:
                best_size, best_set = size, chosen
            return
        if size + _node_lower_bound(masks, pairs, residual, deficient, avail, n) >= best_size:
            return
        # branch on the bottleneck pair's lowest available distinguisher
        target = max(deficient, key=lambda i: (residual[i], -i))
        v_bit = (masks[target] & avail) & -(masks[target] & avail)
        recurse(chosen | v_bit, excluded)
        recurse(chosen, excluded | v_bit)

    recurse(forced, 0)
    elapsed = time.perf_counter() - start
    if state["budget_hit"]:
        root_lb = max(forced.bit_count(), lower_bound_pair_slack(pd, k).bound)
        return SolveResult(best_set, best_size, FEASIBLE_UB,
                           nodes_explored=state["nodes"], elapsed=elapsed,
                           lower_bound_at_exit=root_lb)
    return SolveResult(best_set, best_size, OPTIMAL,
                       nodes_explored=state["nodes"], elapsed=elapsed,
                       lower_bound_at_exit=best_size)


def brute_force_min(g: Graph, k: int, budget: Budget | None = None) -> SolveResult:
    """Subset enumeration oracle using the definitional check.

    Increasing size, lexicographic within size; first success is optimal.
    Intended for small n (<= ~12, or <= ~20 when the answer is tiny).
    """
    start = time.perf_counter()
    dm = all_pairs_distances(g)
    pd = distinguisher_table(dm)
    if k > kappa(pd):
        return SolveResult(0, 0, INFEASIBLE, elapsed=time.perf_counter() - start)
    # per-vertex mask over pair indices it distinguishes, straight from distances
    d = dm.d
    n = g.n
    pair_rows = []
    for s in range(n):
        row = 0
        idx = 0
        for x in range(n):
            for y in range(x + 1, n):
                if d[s, x] != d[s, y]:
                    row |= 1 << idx
                idx += 1
        pair_rows.append(row)
    all_pairs = (1 << (n * (n - 1) // 2)) - 1

    def definitional_ok(combo: tuple[int, ...]) -> bool:
        for removed in combinations(combo, k - 1):
            cov = 0
            for s in combo:
                if s not in removed:
                    cov |= pair_rows[s]
            if cov != all_pairs:
                return False
        return True

    nodes = 0
    for size in range(k, n + 1):
        for combo in combinations(range(n), size):
            nodes += 1
            if definitional_ok(combo):
                return SolveResult(to_bitset(combo), size, OPTIMAL,
                                   nodes_explored=nodes,
                                   elapsed=time.perf_counter() - start,
                                   lower_bound_at_exit=size)
    raise AssertionError("feasible instance exhausted all subsets")  # unreachable
