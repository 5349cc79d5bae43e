"""Vertex sets as Python int bitsets (bit i = vertex i)."""

from __future__ import annotations

from typing import Iterable, Iterator


def to_bitset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_bitset(mask: int) -> list[int]:
    """Set bits as a sorted vertex list."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_set(n: int) -> int:
    return (1 << n) - 1
