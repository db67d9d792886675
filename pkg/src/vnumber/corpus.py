"""Graph corpora for suites: exhaustive labelled graphs, graph6 streams, random samples."""

from __future__ import annotations

import logging
from itertools import permutations
from typing import Iterable, Iterator, Optional

from . import families
from .graph import Graph
from .io import iter_graph6

log = logging.getLogger(__name__)

# 2^21 labelled graphs = every graph on 7 vertices
EXHAUSTIVE_CAP = 1 << 21


def pair_order(n: int) -> list[tuple[int, int]]:
    """graph6 pair order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_code(n: int, code: int, pairs: Optional[list[tuple[int, int]]] = None) -> Graph:
    pairs = pairs or pair_order(n)
    adj = [0] * n
    k = 0
    while code:
        if code & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        code >>= 1
        k += 1
    return Graph(n, tuple(adj))


def labelled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def exhaustive_count(min_n: int, max_n: int) -> int:
    return sum(labelled_count(n) for n in range(min_n, max_n + 1))


def _orbit_maps(n: int) -> list[list[int]]:
    pairs = pair_order(n)
    index = {p: k for k, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    return maps


def _apply(code: int, target: list[int]) -> int:
    out = 0
    k = 0
    while code:
        if code & 1:
            out |= 1 << target[k]
        code >>= 1
        k += 1
    return out


def canonical_code(g: Graph) -> int:
    """Smallest pair-bit code over all relabellings (brute force, small n only)."""
    pairs = pair_order(g.n)
    code = sum(1 << k for k, (i, j) in enumerate(pairs) if g.adj[i] >> j & 1)
    return min(_apply(code, t) for t in _orbit_maps(g.n))


def exhaustive(min_n: int, max_n: int, *, dedup: bool = False) -> Iterator[tuple[str, Graph]]:
    """Every labelled graph on ``n`` vertices for ``min_n <= n <= max_n``, or one per isomorphism class."""
    for n in range(min_n, max_n + 1):
        pairs = pair_order(n)
        total = labelled_count(n)
        if not dedup:
            for code in range(total):
                yield f"n{n}:{code}", graph_from_code(n, code, pairs)
            log.info("n=%d: %d labelled graphs", n, total)
            continue
        maps = _orbit_maps(n)
        seen = bytearray(total)
        classes = 0
        for code in range(total):
            if seen[code]:
                continue
            classes += 1
            for t in maps:
                seen[_apply(code, t)] = 1
            yield f"n{n}:{code}", graph_from_code(n, code, pairs)
        log.info("n=%d: %d labelled graphs, %d isomorphism classes", n, total, classes)


def from_graph6_file(path: str) -> Iterator[tuple[str, Graph]]:
    with open(path, "rb") as fh:
        for idx, g in enumerate(iter_graph6(fh.read())):
            yield f"{path}:{idx + 1}", g


def random_sample(ns: Iterable[int], samples: int, p: float, seed: int) -> Iterator[tuple[str, Graph]]:
    """Sample ``s`` uses ``n = ns[s % len(ns)]`` and seed ``seed + s``."""
    ns = list(ns)
    for s in range(samples):
        n = ns[s % len(ns)]
        yield f"random(n={n},p={p},seed={seed + s})", families.random_graph(n, p, seed + s)


def parse_range(text: str) -> list[int]:
    """``"3..12"`` -> 3..12 inclusive; ``"5"`` -> [5]; ``"3,5,7"`` -> list."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(t) for t in text.split(",")]
