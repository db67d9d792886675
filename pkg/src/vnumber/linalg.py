"""Exact matrix rank over GF(2) and over the rationals."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def gf2_rank(rows: Iterable[int], ncols: int | None = None) -> int:
    """Rank of a 0/1 matrix whose rows are int bitmasks."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                break
            r ^= p
        if ncols is not None and len(pivots) == ncols:
            break
    return len(pivots)


def rational_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows ``{col: value}``.

    Fraction-free elimination; each reduced row is divided by its content so
    entries stay small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = max(r)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                break
            a, b = p[lead], r[lead]
            new = {c: a * v for c, v in r.items()}
            for c, v in p.items():
                new[c] = new.get(c, 0) - b * v
            r = {c: v for c, v in new.items() if v}
            if r:
                content = 0
                for v in r.values():
                    content = gcd(content, v)
                if content > 1:
                    r = {c: v // content for c, v in r.items()}
    return len(pivots)
