"""Graded Betti numbers of R/I for square-free I via Hochster's formula.

``beta_{i,j}(R/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W)`` where ``Delta`` is
the Stanley-Reisner complex of ``I``. Reduced homology ranks come from exact
boundary-matrix ranks over GF(2) (default) or Q.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import bits
from .covers import cover_ideal, minimal_covers
from .errors import CrossCheckError, DegenerateInputError
from .graph import Graph
from .ideal import SqFreeIdeal, edge_ideal
from .linalg import gf2_rank, rational_rank

FIELDS = ("gf2", "rat")


class SimplicialComplex:
    """Stanley-Reisner complex of a square-free ideal: ``F`` is a face iff no generator lies inside ``F``.

    The face predicate is tabulated once for all ``2^n`` subsets, together with
    ``core[W]``, the union of the generators contained in ``W``.
    """

    def __init__(self, ideal: SqFreeIdeal):
        self.ideal = ideal
        self.n = n = ideal.n
        dtype = np.uint32 if n <= 32 else object
        core = np.zeros(1 << n, dtype=dtype)
        for g in ideal.gens:
            core[g] = g
        # superset closure: core[W] |= core[W - {i}] for every i in W
        for i in range(n):
            view = core.reshape(-1, 2, 1 << i)
            view[:, 1, :] |= view[:, 0, :]
        self._core = core
        self._face = bytes((core == 0).astype(np.uint8))

    def is_face(self, f: int) -> bool:
        return bool(self._face[f])

    def core(self, w: int) -> int:
        return int(self._core[w])

    def faces_in(self, w: int) -> list[list[int]]:
        """Faces inside ``w`` grouped by size (index k holds the faces with k vertices)."""
        face = self._face
        by_size: list[list[int]] = [[] for _ in range(w.bit_count() + 1)]
        if not face[0]:
            return by_size
        verts = bits.to_list(w)
        stack = [(0, 0)]
        while stack:
            f, start = stack.pop()
            by_size[f.bit_count()].append(f)
            for idx in range(start, len(verts)):
                g = f | (1 << verts[idx])
                if face[g]:
                    stack.append((g, idx + 1))
        return by_size


@dataclass(frozen=True)
class HomologyProfile:
    """``ranks[d + 1] = dim H~_d`` for ``d = -1 .. n-1``."""

    ranks: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        if d + 1 < 0 or d + 1 >= len(self.ranks):
            return 0
        return self.ranks[d + 1]

    def nonzero(self) -> dict[int, int]:
        return {d - 1: r for d, r in enumerate(self.ranks) if r}


def _boundary_rank(upper: list[int], lower: list[int], field: str, cap: int) -> int:
    """``cap`` bounds the rank from above (the kernel dimension one step down)."""
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if field == "gf2":
        rows = []
        for f in upper:
            row = 0
            rest = f
            while rest:
                low = rest & -rest
                row |= 1 << index[f ^ low]
                rest ^= low
            rows.append(row)
        return gf2_rank(rows, cap)
    srows = []
    for f in upper:
        row = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            row[index[f ^ low]] = sign
            sign = -sign
            rest ^= low
        srows.append(row)
    return rational_rank(srows)


def _check_field(field: str) -> None:
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


def reduced_homology_ranks(c: SimplicialComplex, w: int, field: str = "gf2") -> HomologyProfile:
    _check_field(field)
    if w < 0 or w & ~bits.full(c.n):
        raise ValueError(f"vertex set {bin(w)} outside 0..{c.n - 1}")
    by_size = c.faces_in(w)
    counts = [len(fs) for fs in by_size]
    # rank of the boundary from size-k faces to size-(k-1) faces, k >= 1
    brank = [0] * (len(by_size) + 1)
    for k in range(1, len(by_size)):
        cap = counts[k - 1] - brank[k - 1]
        if counts[k] and cap:
            brank[k] = _boundary_rank(by_size[k], by_size[k - 1], field, cap)
    ranks = [0] * (c.n + 1)
    for k in range(len(by_size)):
        ranks[k] = counts[k] - brank[k] - brank[k + 1]
    return HomologyProfile(tuple(ranks))


@dataclass
class BettiTable:
    """``entries[(i, j)] = beta_{i,j}(R/I)``; zero entries are omitted."""

    n: int
    entries: dict[tuple[int, int], int]
    field_tag: str = "gf2"

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def reg(self) -> int:
        return max(j - i for (i, j) in self.entries)

    @property
    def pd(self) -> int:
        return max(i for (i, _) in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def total(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def rows(self) -> list[list[int]]:
        """Macaulay2-style display: row ``j - i``, column ``i``."""
        return [[self[(i, i + r)] for i in range(self.pd + 1)] for r in range(self.reg + 1)]


def _sweep(ideal: SqFreeIdeal, field: str, lo: int, hi: int, prune: bool) -> Counter:
    c = SimplicialComplex(ideal)
    return _sweep_complex(c, field, lo, hi, prune)


def _sweep_complex(c: SimplicialComplex, field: str, lo: int, hi: int, prune: bool) -> Counter:
    acc: Counter = Counter()
    for w in range(lo, hi):
        # a vertex of W lying in no generator inside W is a cone point: Delta|_W is acyclic
        if prune and w and w & ~c.core(w):
            continue
        j = w.bit_count()
        for d, r in reduced_homology_ranks(c, w, field).nonzero().items():
            acc[(j - d - 1, j)] += r
    return acc


def betti_table(ideal: SqFreeIdeal, field: str = "gf2", *, prune: bool = True, jobs: int = 1) -> BettiTable:
    """Hochster sweep over every ``W`` in increasing bitmask order.

    With ``jobs > 1`` the range of ``W`` is split into chunks evaluated in
    worker processes; partial tables are added, so the result does not depend
    on scheduling.
    """
    _check_field(field)
    if ideal.is_zero or ideal.is_unit:
        raise DegenerateInputError("Betti table needs a proper nonzero ideal")
    total = 1 << ideal.n
    if jobs <= 1:
        acc = _sweep_complex(SimplicialComplex(ideal), field, 0, total, prune)
    else:
        step = max(1, total // (jobs * 8))
        bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
        acc = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep, ideal, field, lo, hi, prune) for lo, hi in bounds]
            for fut in futures:
                acc.update(fut.result())
    return BettiTable(ideal.n, {k: v for k, v in sorted(acc.items()) if v}, field)


@dataclass(frozen=True)
class AlgebraInvariants:
    reg_RmodJ: int
    pd_RmodI: int
    depth_RmodI: int
    dim_RmodI: int
    cm: bool
    field_tag: str = "gf2"
    betti_I: Optional[BettiTable] = field(default=None, compare=False, repr=False)
    betti_J: Optional[BettiTable] = field(default=None, compare=False, repr=False)


def reg_pd_depth_dim(g: Graph, field: str = "gf2", *, jobs: int = 1) -> AlgebraInvariants:
    """Both tables are computed independently; Terai's ``pd(R/I) = reg(R/J) + 1`` must hold."""
    table_i = betti_table(edge_ideal(g), field, jobs=jobs)
    table_j = betti_table(cover_ideal(g), field, jobs=jobs)
    pd = table_i.pd
    reg = table_j.reg
    if reg != pd - 1:
        raise CrossCheckError(f"Terai mismatch on {g}: pd(R/I)={pd} but reg(R/J)={reg}", kind="engine")
    depth = g.n - pd
    dim = g.n - minimal_covers(g).alpha0
    return AlgebraInvariants(reg, pd, depth, dim, depth == dim, field, table_i, table_j)


def _check_hyperedges(h: SqFreeIdeal) -> list[int]:
    if h.is_zero or h.is_unit:
        raise DegenerateInputError("bounds need a proper nonzero ideal")
    return h.sorted_gens()


def induced_matching_bound(h: SqFreeIdeal) -> int:
    """Max of ``sum(|e| - 1)`` over induced matchings among the generators.

    Being an induced matching is inherited by subsets, so the search extends
    partial matchings and abandons any that stop being induced.
    """
    edges = _check_hyperedges(h)
    best = 0

    def extend(start: int, union: int, chosen: int, weight: int) -> None:
        nonlocal best
        best = max(best, weight)
        for idx in range(start, len(edges)):
            e = edges[idx]
            if e & union:
                continue
            new_union = union | e
            new_chosen = chosen | (1 << idx)
            if any(f & ~new_union == 0 and not new_chosen >> k & 1 for k, f in enumerate(edges)):
                continue
            extend(idx + 1, new_union, new_chosen, weight + e.bit_count() - 1)

    extend(0, 0, 0, 0)
    return best


def two_collage_bound(h: SqFreeIdeal) -> int:
    """Min of ``sum(|e'| - 1)`` over 2-collages, as a weighted hitting-set search.

    Generator ``e'`` absorbs ``e`` when ``e`` minus one vertex fits inside ``e'``,
    i.e. ``|e \\ e'| <= 1``; a 2-collage is a set of generators absorbing all of them.
    """
    edges = _check_hyperedges(h)
    weights = [e.bit_count() - 1 for e in edges]
    absorbers = []
    for e in edges:
        absorbers.append(bits.from_iter(k for k, f in enumerate(edges) if (e & ~f).bit_count() <= 1))
    best = sum(weights)

    def search(chosen: int, cost: int) -> None:
        nonlocal best
        if cost >= best:
            return
        open_sets = [a for a in absorbers if not a & chosen]
        if not open_sets:
            best = cost
            return
        options = min(open_sets, key=int.bit_count)
        for k in sorted(bits.members(options), key=lambda k: weights[k]):
            search(chosen | (1 << k), cost + weights[k])

    # the whole generator set is always a collage; the search needs a strict improvement
    best += 1
    search(0, 0)
    return best
