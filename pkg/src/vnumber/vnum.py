"""v-numbers of square-free monomial ideals, with witnesses.

Witnesses are square-free monomials ``X_A`` given by their support ``A``.
Every returned witness is re-checked by a direct colon computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from . import bits
from .covers import cover_ideal, minimal_covers
from .errors import CrossCheckError, DegenerateInputError, InvalidPrimeError
from .graph import Graph, is_independent, neighbors
from .ideal import (
    PrimeSupport,
    SqFreeIdeal,
    colon,
    edge_ideal,
    is_minimal_transversal,
    is_prime,
)


@dataclass(frozen=True)
class VWitness:
    witness: int
    prime: PrimeSupport

    @property
    def degree(self) -> int:
        return self.witness.bit_count()


def subsets_by_size(n: int, max_size: Optional[int] = None) -> Iterator[int]:
    """Subsets of 0..n-1 by increasing size, lexicographic within a size."""
    top = n if max_size is None else min(n, max_size)
    for d in range(top + 1):
        for combo in combinations(range(n), d):
            yield bits.from_iter(combo)


def _prime_ideal(p: PrimeSupport) -> frozenset[int]:
    return frozenset(1 << v for v in bits.members(p.vars))


def _verify(ideal: SqFreeIdeal, w: VWitness) -> VWitness:
    got = colon(ideal, w.witness)
    if got.gens != _prime_ideal(w.prime):
        raise CrossCheckError(f"witness {bits.fmt(w.witness, False)} gives {got}, not {w.prime}")
    if not is_minimal_transversal(ideal.gens, w.prime.vars):
        raise CrossCheckError(f"{w.prime} is a colon prime but not a minimal prime of {ideal}")
    return w


def _require_proper_nonzero(ideal: SqFreeIdeal) -> None:
    if ideal.is_zero or ideal.is_unit:
        raise DegenerateInputError("v-number needs a proper nonzero ideal")


def v_number(ideal: SqFreeIdeal) -> tuple[int, VWitness]:
    """Least ``|A|`` with ``I : X_A`` prime; first such ``A`` in size-then-lex order."""
    _require_proper_nonzero(ideal)
    for a in subsets_by_size(ideal.n):
        if ideal.contains(a):
            continue
        p = is_prime(colon(ideal, a))
        if p is not None:
            w = _verify(ideal, VWitness(a, p))
            return w.degree, w
    raise CrossCheckError(f"no square-free witness found for {ideal}")


def local_v_number(ideal: SqFreeIdeal, p: PrimeSupport) -> Optional[tuple[int, VWitness]]:
    _require_proper_nonzero(ideal)
    if not is_minimal_transversal(ideal.gens, p.vars):
        raise InvalidPrimeError(f"{p} is not an associated prime of {ideal}")
    target = _prime_ideal(p)
    for a in subsets_by_size(ideal.n):
        if ideal.contains(a):
            continue
        if colon(ideal, a).gens == target:
            w = _verify(ideal, VWitness(a, p))
            return w.degree, w
    return None


def edge_v_number(g: Graph) -> tuple[int, VWitness]:
    """Least ``|A|`` over independent ``A`` whose neighbourhood is a minimal vertex cover."""
    if g.m == 0:
        raise DegenerateInputError("edgeless graph")
    covers = set(minimal_covers(g).covers)
    for a in subsets_by_size(g.n):
        if not is_independent(g, a):
            continue
        nb = neighbors(g, a)
        if nb in covers:
            w = _verify(edge_ideal(g), VWitness(a, PrimeSupport(nb)))
            return w.degree, w
    raise CrossCheckError(f"no independent set with minimal-cover neighbourhood in {g}")


def cover_v_number(g: Graph) -> tuple[int, VWitness]:
    """Least ``|C|`` such that ``C`` is not a cover but ``C+u`` and ``C+v`` are, for an edge uv.

    ``C+u`` and ``C+v`` both cover exactly when ``uv`` is the only edge ``C``
    misses, so the edge is determined by ``C``.
    """
    edges = g.edge_masks()
    if not edges:
        raise DegenerateInputError("edgeless graph")
    for c in subsets_by_size(g.n):
        missed = [e for e in edges if not e & c]
        if len(missed) == 1:
            w = VWitness(c, PrimeSupport(missed[0]))
            return w.degree, _verify(cover_ideal(g), w)
    raise CrossCheckError(f"no cover witness found in {g}")


def lower_bound_check(g: Graph) -> bool:
    """``v(J(G)) >= alpha_0(G) - 1``."""
    v, _ = cover_v_number(g)
    return v >= minimal_covers(g).alpha0 - 1
