"""Square-free monomial ideals, stored as antichains of bitmask supports.

The unit ideal is ``gens == {0}`` (the empty monomial 1); the zero ideal is
``gens == {}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import bits
from .errors import DegenerateInputError, VertexRangeError
from .graph import Graph


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by the variables in ``vars``."""

    vars: int

    def __post_init__(self):
        if self.vars <= 0:
            raise ValueError("a monomial prime needs at least one variable")

    @property
    def height(self) -> int:
        return self.vars.bit_count()

    def __repr__(self):
        return f"PrimeSupport({bits.fmt(self.vars, one_based=False)})"


@dataclass(frozen=True)
class SqFreeIdeal:
    n: int
    gens: frozenset[int]

    def __post_init__(self):
        universe = bits.full(self.n)
        for g in self.gens:
            if g < 0 or g & ~universe:
                raise VertexRangeError(f"generator {bin(g)} uses a variable outside 0..{self.n - 1}")
        if len(minimalize(self.gens, self.n, _check=False).gens) != len(self.gens):
            raise ValueError("generators do not form an antichain")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return 0 in self.gens

    def sorted_gens(self) -> list[int]:
        return sorted(self.gens, key=bits.lex_key)

    def contains(self, monomial: int) -> bool:
        """Whether the square-free monomial with support ``monomial`` lies in the ideal."""
        return any(g & ~monomial == 0 for g in self.gens)

    def support(self) -> int:
        out = 0
        for g in self.gens:
            out |= g
        return out

    def __repr__(self):
        return f"SqFreeIdeal(n={self.n}, <{', '.join(bits.fmt(g, False) for g in self.sorted_gens())}>)"


def minimalize(gens: Iterable[int], n: int, _check: bool = True) -> SqFreeIdeal:
    """Drop every support that contains another one."""
    kept: list[int] = []
    for g in sorted(set(gens), key=int.bit_count):
        if not any(k & ~g == 0 for k in kept):
            kept.append(g)
    ideal = object.__new__(SqFreeIdeal)
    object.__setattr__(ideal, "n", n)
    object.__setattr__(ideal, "gens", frozenset(kept))
    if _check:
        universe = bits.full(n)
        if any(g & ~universe for g in kept):
            raise VertexRangeError(f"generator outside 0..{n - 1}")
    return ideal


def ideal_from_sets(n: int, sets: Iterable[Iterable[int]]) -> SqFreeIdeal:
    return minimalize((bits.from_iter(s) for s in sets), n)


def _require_proper_nonzero(ideal: SqFreeIdeal) -> None:
    if ideal.is_zero:
        raise DegenerateInputError("zero ideal")
    if ideal.is_unit:
        raise DegenerateInputError("unit ideal")


def edge_ideal(g: Graph) -> SqFreeIdeal:
    edges = g.edge_masks()
    if not edges:
        raise DegenerateInputError("edge ideal of an edgeless graph is zero")
    return minimalize(edges, g.n)


def colon(ideal: SqFreeIdeal, f: int) -> SqFreeIdeal:
    """``I : X_f`` for a square-free monomial ``X_f``: generators lose the variables of ``f``."""
    if f < 0 or f & ~bits.full(ideal.n):
        raise VertexRangeError(f"monomial support {bin(f)} outside 0..{ideal.n - 1}")
    return minimalize((g & ~f for g in ideal.gens), ideal.n, _check=False)


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Inclusion-minimal sets meeting every set in ``edges`` (all edges nonempty).

    Branch on the vertices of the first unhit edge; the i-th branch forbids the
    vertices tried before it, so each candidate is produced at most once.
    """
    edges = sorted(set(edges), key=lambda e: (e.bit_count(), e))
    if any(e == 0 for e in edges):
        raise DegenerateInputError("cannot hit an empty set")
    found: list[int] = []

    def grow(chosen: int, forbidden: int) -> None:
        for e in edges:
            if not e & chosen:
                break
        else:
            found.append(chosen)
            return
        options = e & ~forbidden
        for v in bits.members(options):
            grow(chosen | (1 << v), forbidden)
            forbidden |= 1 << v

    grow(0, 0)
    out = []
    for t in sorted(found, key=int.bit_count):
        if not any(k & ~t == 0 for k in out):
            out.append(t)
    return out


def alexander_dual(ideal: SqFreeIdeal) -> SqFreeIdeal:
    """Intersection of the primes ``<g>`` over generators ``g``, i.e. minimal transversals."""
    _require_proper_nonzero(ideal)
    return minimalize(minimal_transversals(ideal.gens), ideal.n, _check=False)


def is_prime(ideal: SqFreeIdeal) -> Optional[PrimeSupport]:
    """A square-free monomial ideal is prime iff all its generators are variables."""
    if ideal.is_zero or ideal.is_unit:
        return None
    if all(g.bit_count() == 1 for g in ideal.gens):
        return PrimeSupport(ideal.support())
    return None


def is_minimal_transversal(edges: Iterable[int], t: int) -> bool:
    edges = list(edges)
    if not all(e & t for e in edges):
        return False
    for v in bits.members(t):
        smaller = t & ~(1 << v)
        if all(e & smaller for e in edges):
            return False
    return True


def minimal_primes(ideal: SqFreeIdeal) -> list[PrimeSupport]:
    _require_proper_nonzero(ideal)
    return [PrimeSupport(t) for t in sorted(minimal_transversals(ideal.gens), key=bits.lex_key)]


def height(ideal: SqFreeIdeal) -> int:
    return min(p.height for p in minimal_primes(ideal))


def big_height(ideal: SqFreeIdeal) -> int:
    return max(p.height for p in minimal_primes(ideal))
