"""Deterministic graph families, plus seeded random graphs."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path of length ``n``: ``n + 1`` vertices, ``n`` edges."""
    if n < 1:
        raise ValueError(f"path needs length >= 1, got {n}")
    return Graph.from_edges(n + 1, [(i, i + 1) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts are consecutive vertex blocks in the given order."""
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError(f"need at least two parts of size >= 1, got {list(sizes)}")
    part = []
    for idx, s in enumerate(sizes):
        part.extend([idx] * s)
    n = len(part)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def glued_cycles(k: int) -> Graph:
    """``k`` seven-cycles sharing vertex 0.

    Copy ``i`` (0-based) owns vertices ``6i+1 .. 6i+6`` and runs
    ``0 - 6i+1 - ... - 6i+6 - 0``.
    """
    if k < 1:
        raise ValueError(f"glued_cycles needs k >= 1, got {k}")
    edges = []
    for i in range(k):
        ring = [0] + [6 * i + j for j in range(1, 7)]
        edges.extend((ring[j], ring[(j + 1) % 7]) for j in range(7))
    return Graph.from_edges(6 * k + 1, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn with ``random.Random(seed)`` (Mersenne Twister).

    Pairs are visited as (0,1), (0,2), ..., (n-2,n-1); the pair becomes an edge
    when ``rng.random() < p``. Same seed, same graph on every platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


FAMILIES = {
    "cycle": "cycle N (N >= 3)",
    "path": "path N (length N, N+1 vertices)",
    "complete": "complete N",
    "multipartite": "multipartite A,B,... (part sizes)",
    "glued-cycles": "glued-cycles K (K seven-cycles sharing one vertex)",
    "random": "random N,P,SEED",
}


def build(name: str, params: str) -> Graph:
    """Build a family member from a CLI-style parameter string."""
    try:
        if name == "cycle":
            return cycle(int(params))
        if name == "path":
            return path(int(params))
        if name == "complete":
            return complete(int(params))
        if name == "multipartite":
            return complete_multipartite([int(s) for s in params.split(",")])
        if name == "glued-cycles":
            return glued_cycles(int(params))
        if name == "random":
            n, p, seed = params.split(",")
            return random_graph(int(n), float(p), int(seed))
    except ValueError as exc:
        raise ValueError(f"bad parameters {params!r} for family {name!r}: {exc}") from None
    raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
