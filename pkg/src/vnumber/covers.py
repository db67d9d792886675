"""Vertex covers and independent sets of graphs."""

from __future__ import annotations

from dataclasses import dataclass

from . import bits
from .errors import DegenerateInputError
from .graph import Graph
from .ideal import SqFreeIdeal, minimalize


@dataclass(frozen=True)
class CoverCatalog:
    covers: tuple[int, ...]
    alpha0: int
    bight: int

    @property
    def unmixed(self) -> bool:
        return self.alpha0 == self.bight


def maximal_independent_sets(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting, run on the non-adjacency relation.

    Sorted by (size, members) so results are reproducible.
    """
    universe = g.vertices
    # non-neighbours of v, excluding v itself
    anti = [universe & ~g.adj[v] & ~(1 << v) for v in g]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits.members(p | x), key=lambda u: (anti[u] & p).bit_count())
        for v in bits.members(p & ~anti[pivot]):
            expand(r | (1 << v), p & anti[v], x & anti[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, universe, 0)
    return sorted(out, key=bits.lex_key)


def is_cover(g: Graph, c: int) -> bool:
    for u, v in g.edges():
        if not (c >> u & 1 or c >> v & 1):
            return False
    return True


def minimal_covers(g: Graph) -> CoverCatalog:
    if g.m == 0:
        raise DegenerateInputError("an edgeless graph has no nonempty minimal vertex cover")
    universe = g.vertices
    covers = sorted((universe & ~s for s in maximal_independent_sets(g)), key=bits.lex_key)
    sizes = [c.bit_count() for c in covers]
    return CoverCatalog(tuple(covers), min(sizes), max(sizes))


def cover_ideal(g: Graph) -> SqFreeIdeal:
    return minimalize(minimal_covers(g).covers, g.n)
