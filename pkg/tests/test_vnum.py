import random

import pytest

from conftest import all_graphs, graph, iso_reps
from oracles import bounded_exponent_v_number, brute_cover_v, edge_sets
from vnumber import bits, families
from vnumber.covers import cover_ideal, minimal_covers
from vnumber.errors import DegenerateInputError, InvalidPrimeError
from vnumber.ideal import PrimeSupport, colon, edge_ideal, ideal_from_sets, is_prime, minimal_primes, minimalize
from vnumber.vnum import (
    cover_v_number,
    edge_v_number,
    local_v_number,
    lower_bound_check,
    v_number,
)

S = bits.from_iter


def test_v_number_of_prime_is_zero():
    d, w = v_number(ideal_from_sets(2, [[0], [1]]))
    assert d == 0 and w.witness == 0 and w.prime == PrimeSupport(S([0, 1]))


def test_v_number_examples():
    d, w = v_number(ideal_from_sets(3, [[0, 1], [1, 2]]))
    assert (d, w.witness, w.prime.vars) == (1, S([0]), S([1]))
    d, w = v_number(ideal_from_sets(3, [[1], [0, 2]]))
    assert (d, w.witness, w.prime.vars) == (1, S([0]), S([1, 2]))


def test_v_number_degenerate():
    with pytest.raises(DegenerateInputError):
        v_number(minimalize([0], 2))
    with pytest.raises(DegenerateInputError):
        v_number(minimalize([], 2))


def test_local_v_numbers_of_path():
    i_p2 = ideal_from_sets(3, [[0, 1], [1, 2]])
    d, w = local_v_number(i_p2, PrimeSupport(S([1])))
    assert d == 1 and w.witness in (S([0]), S([2]))
    # the other cover {0,2}: colon by x_1 gives <x_0, x_2>
    d, w = local_v_number(i_p2, PrimeSupport(S([0, 2])))
    assert (d, w.witness) == (1, S([1]))
    prime = ideal_from_sets(2, [[0], [1]])
    assert local_v_number(prime, PrimeSupport(S([0, 1])))[0] == 0


def test_local_v_number_rejects_non_associated_prime():
    with pytest.raises(InvalidPrimeError):
        local_v_number(ideal_from_sets(3, [[0, 1], [1, 2]]), PrimeSupport(S([0, 1])))


def test_v_is_min_of_local_values():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(2, 6)
        gens = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 5))]
        ideal = minimalize(gens, n)
        local = [local_v_number(ideal, p)[0] for p in minimal_primes(ideal)]
        assert v_number(ideal)[0] == min(local)


def test_prime_iff_v_zero():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 5)
        ideal = minimalize([rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 4))], n)
        assert (v_number(ideal)[0] == 0) == (is_prime(ideal) is not None)


def test_edge_v_number_examples():
    d, w = edge_v_number(families.path(1))
    assert d == 1 and w.prime.vars == S([1])
    d, w = edge_v_number(families.cycle(5))
    assert (d, w.witness, w.prime.vars) == (2, S([0, 2]), S([1, 3, 4]))
    d, w = edge_v_number(families.path(2))
    assert (d, w.witness, w.prime.vars) == (1, S([0]), S([1]))


def test_cover_v_number_examples():
    d, w = cover_v_number(families.cycle(7))
    assert (d, w.witness, w.prime.vars) == (3, S([0, 2, 4]), S([5, 6]))
    assert cover_v_number(families.cycle(4))[0] == 2
    d, w = cover_v_number(families.complete_multipartite([2, 2, 2]))
    assert d == 4 and w.witness == (0b111111 & ~w.prime.vars)


def test_witnesses_are_verified_colons():
    for g in [families.cycle(6), families.glued_cycles(2), families.complete_multipartite([1, 2, 3])]:
        _, w = cover_v_number(g)
        assert colon(cover_ideal(g), w.witness).gens == {1 << v for v in bits.members(w.prime.vars)}
        _, w = edge_v_number(g)
        assert colon(edge_ideal(g), w.witness).gens == {1 << v for v in bits.members(w.prime.vars)}


def test_edgeless_graph_rejected():
    for fn in (edge_v_number, cover_v_number, lower_bound_check):
        with pytest.raises(DegenerateInputError):
            fn(graph(3))


def test_lower_bound_examples():
    assert lower_bound_check(families.cycle(7))
    assert lower_bound_check(families.cycle(4))


def test_lower_bound_exhaustive():
    for g in all_graphs(6, with_edges=True):
        assert lower_bound_check(g)


def test_cover_v_matches_definition_brute_force():
    for g in all_graphs(5, with_edges=True):
        assert cover_v_number(g)[0] == brute_cover_v(g.n, edge_sets(g))


def test_engines_agree_with_generic_search_n7():
    for g in iso_reps(7, min_n=7, with_edges=True):
        assert cover_v_number(g) == v_number(cover_ideal(g))
        assert edge_v_number(g)[0] == v_number(edge_ideal(g))[0]


def test_squarefree_witnesses_not_beaten_on_random_ideals():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 5)
        ideal = minimalize([rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 4))], n)
        gens = [frozenset(bits.members(g)) for g in ideal.gens]
        assert bounded_exponent_v_number(gens, n) == v_number(ideal)[0]
