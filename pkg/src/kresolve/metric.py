"""Distinguisher tables and k-resolving-set checks.

A set S is k-resolving iff every vertex pair keeps at least k of its
distinguishers inside S: removing any k-1 vertices then still leaves one,
and a pair with at most k-1 distinguishers in S dies when exactly those
are removed. The definitional check below exists to guard this reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bitset import iter_bits
from .graph import DistanceMatrix, Graph, all_pairs_distances


@dataclass(frozen=True)
class PairDistinguishers:
    """For each unordered pair (x, y), x < y, the bitset of vertices s
    with d(s, x) != d(s, y). Pairs are in lexicographic order."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    masks: tuple[int, ...]

    def index(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        # pairs (0,1),(0,2),...,(0,n-1),(1,2),...: closed-form offset
        return x * (2 * self.n - x - 1) // 2 + (y - x - 1)

    def mask(self, x: int, y: int) -> int:
        return self.masks[self.index(x, y)]


def distinguisher_table(dm: DistanceMatrix) -> PairDistinguishers:
    n = dm.n
    d = dm.d
    pairs = []
    masks = []
    for x in range(n):
        col_x = d[:, x]
        for y in range(x + 1, n):
            diff = col_x != d[:, y]
            mask = int.from_bytes(np.packbits(diff, bitorder="little").tobytes(), "little")
            pairs.append((x, y))
            masks.append(mask)
    return PairDistinguishers(n, tuple(pairs), tuple(masks))


def kappa(pd: PairDistinguishers) -> int:
    """Largest k admitting a k-resolving set: min pair distinguisher count."""
    if not pd.masks:
        raise ValueError("kappa is undefined for graphs with fewer than 2 vertices")
    return min(m.bit_count() for m in pd.masks)


def is_k_resolving(pd: PairDistinguishers, S: int, k: int) -> bool:
    """True iff every pair has at least k distinguishers inside S."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return all((S & m).bit_count() >= k for m in pd.masks)


def is_k_resolving_definitional(g: Graph, S: int, k: int,
                                dm: DistanceMatrix | None = None) -> bool:
    """Direct form: every (k-1)-subset removal leaves a resolving set.

    Checked straight from distances; intended as an oracle for small |S|.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if dm is None:
        dm = all_pairs_distances(g)
    d = dm.d
    members = list(iter_bits(S))
    # |S| < k-1: removing "k-1" vertices can wipe out S entirely, so the
    # removal size is capped at |S| (keeps the check monotone in S and k)
    for removed in combinations(members, min(k - 1, len(members))):
        rest = [s for s in members if s not in removed]
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if not any(d[s, x] != d[s, y] for s in rest):
                    return False
    return True
