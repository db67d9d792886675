"""Vertex sets as Python int bitmasks (bit i set <=> vertex i present)."""

from __future__ import annotations

from typing import Iterable, Iterator


def from_iter(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself (descending)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def lex_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Order by size, then lexicographically on the sorted member tuple."""
    return popcount(mask), tuple(members(mask))


def fmt(mask: int, one_based: bool = True) -> str:
    shift = 1 if one_based else 0
    return "{" + ",".join(str(v + shift) for v in members(mask)) + "}"
