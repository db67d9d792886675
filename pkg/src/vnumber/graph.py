"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from . import bits
from .errors import DegenerateInputError, VertexRangeError


@dataclass(frozen=True)
class Graph:
    """Vertices are ``0..n-1``; ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.

    ``labels`` maps internal vertices back to the caller's labels (1-based by
    default, as in text I/O).
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise DegenerateInputError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        universe = bits.full(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~universe:
                raise VertexRangeError(f"neighbour of {v} out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits.members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{u},{v}}}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels))

    @property
    def vertices(self) -> int:
        return bits.full(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits.members(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_masks(self) -> list[int]:
        return [(1 << u) | (1 << v) for u, v in self.edges()]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[(self.labels[u], self.labels[v]) for u, v in self.edges()]})"


def _check_range(g: Graph, s: int) -> None:
    if s < 0 or s & ~g.vertices:
        raise VertexRangeError(f"vertex set {bin(s)} not inside 0..{g.n - 1}")


def neighbors(g: Graph, s: int) -> int:
    """Union of the neighbourhoods of the vertices in ``s``, minus ``s``."""
    _check_range(g, s)
    out = 0
    for v in bits.members(s):
        out |= g.adj[v]
    return out & ~s


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``keep``; returns it together with the old -> new relabelling."""
    _check_range(g, keep)
    if not keep:
        raise DegenerateInputError("induced subgraph on the empty vertex set")
    old = bits.to_list(keep)
    relabel = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for u in bits.members(g.adj[v] & keep):
            nb |= 1 << relabel[u]
        adj.append(nb)
    return Graph(len(old), tuple(adj), tuple(g.labels[v] for v in old)), relabel


def is_independent(g: Graph, s: int) -> bool:
    for v in bits.members(s):
        if g.adj[v] & s:
            return False
    return True


def is_complete_multipartite(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """Test whether every ``V \\ N(v)`` is independent; on success also return the parts.

    Parts are built greedily: take the smallest vertex not yet placed, its part
    is everything outside its neighbourhood.
    """
    universe = g.vertices
    for v in g:
        if not is_independent(g, universe & ~g.adj[v]):
            return False, None
    parts = []
    placed = 0
    while placed != universe:
        rest = universe & ~placed
        v = (rest & -rest).bit_length() - 1
        part = universe & ~g.adj[v]
        parts.append(part)
        placed |= part
    return True, parts


def has_dominated_edge(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically first edge {u, v} with N(u) within N[v] or N(v) within N[u]."""
    for u, v in g.edges():
        if bits.is_subset(g.adj[u], g.closed_nbhd(v)) or bits.is_subset(g.adj[v], g.closed_nbhd(u)):
            return u, v
    return None


def free_vertices(g: Graph) -> int:
    """Vertices of degree one."""
    return bits.from_iter(v for v in g if g.degree(v) == 1)


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visiting order (ties -> smallest vertex)."""
    weight = [0] * g.n
    unvisited = g.vertices
    order = []
    while unvisited:
        best = max(bits.members(unvisited), key=lambda v: (weight[v], -v))
        order.append(best)
        unvisited &= ~(1 << best)
        for u in bits.members(g.adj[best] & unvisited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Reverse MCS order must be a perfect elimination ordering."""
    elim = mcs_order(g)[::-1]
    later = g.vertices
    for v in elim:
        later &= ~(1 << v)
        clique = g.adj[v] & later
        for w in bits.members(clique):
            if not bits.is_subset(clique & ~(1 << w), g.adj[w]):
                return False
    return True


def complement(g: Graph) -> Graph:
    universe = g.vertices
    return Graph(g.n, tuple(universe & ~g.adj[v] & ~(1 << v) for v in g), g.labels)
