"""Constructive upper-bound machinery: radius-2 expansion and the
instance-level checks behind it."""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits
from .graph import DistanceMatrix
from .metric import PairDistinguishers, is_k_resolving, kappa


@dataclass(frozen=True)
class BallGrowthViolation:
    vertex: int
    ball_size: int
    bound: int


@dataclass(frozen=True)
class NearDistinguisherViolation:
    pair: tuple[int, int]
    near_count: int
    required: int


def expand_radius2(dm: DistanceMatrix, S: int) -> int:
    """All vertices within distance 2 of S; turns a k-resolving set into a
    (k+1)-resolving one whenever kappa allows."""
    if S == 0:
        raise ValueError("S must be nonempty")
    out = 0
    members = list(iter_bits(S))
    for v in range(dm.n):
        if any(dm.d[v, s] <= 2 for s in members):
            out |= 1 << v
    return out


def ball(dm: DistanceMatrix, S: int, radius: int) -> int:
    members = list(iter_bits(S))
    out = 0
    for v in range(dm.n):
        if any(dm.d[v, s] <= radius for s in members):
            out |= 1 << v
    return out


def check_ball_growth(dm: DistanceMatrix, pd: PairDistinguishers, S: int,
                      d: int) -> list[BallGrowthViolation]:
    """For a resolving S, each member's radius-d ball holds at most
    1 + d(2d+1)^(|S|-1) vertices; returns the (expected empty) violations."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not is_k_resolving(pd, S, 1):
        raise ValueError("S must be a resolving set")
    size = S.bit_count()
    bound = 1 + d * (2 * d + 1) ** (size - 1)
    out = []
    for v in iter_bits(S):
        ball_size = int((dm.d[v] <= d).sum())
        if ball_size > bound:
            out.append(BallGrowthViolation(v, ball_size, bound))
    return out


def check_near_distinguisher(pd: PairDistinguishers, dm: DistanceMatrix,
                             S: int, k: int) -> list[NearDistinguisherViolation]:
    """For a k-resolving S in a graph with kappa >= k+1, every pair must have
    at least k+1 distinguishers within distance 2 of S."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if kappa(pd) < k + 1:
        raise ValueError("requires kappa(G) >= k + 1")
    if not is_k_resolving(pd, S, k):
        raise ValueError("S must be k-resolving")
    near = ball(dm, S, 2)
    out = []
    for (x, y), m in zip(pd.pairs, pd.masks):
        if (m & S).bit_count() >= k:
            cnt = (m & near).bit_count()
            if cnt < k + 1:
                out.append(NearDistinguisherViolation((x, y), cnt, k + 1))
    return out
