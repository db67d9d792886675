import random
from collections import Counter

import pytest

from conftest import graph, iso_reps
from oracles import (
    brute_induced_matching,
    brute_reduced_homology,
    brute_two_collage,
    hilbert_numerator,
)
from vnumber import bits, families
from vnumber.betti import (
    SimplicialComplex,
    betti_table,
    induced_matching_bound,
    reduced_homology_ranks,
    reg_pd_depth_dim,
    two_collage_bound,
)
from vnumber.covers import cover_ideal, minimal_covers
from vnumber.errors import DegenerateInputError
from vnumber.graph import Graph
from vnumber.ideal import edge_ideal, ideal_from_sets, minimalize
from vnumber.linalg import gf2_rank, rational_rank

S = bits.from_iter


def random_ideal(rng, n, count):
    return minimalize([rng.randrange(1, 1 << n) for _ in range(count)], n)


def gens_sets(ideal):
    return [frozenset(bits.members(g)) for g in ideal.gens]


def test_rank_helpers():
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([]) == 0
    # over Q this matrix has full rank; over GF(2) the rows sum to zero
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    assert rational_rank(rows) == 3
    assert gf2_rank([0b011, 0b110, 0b101]) == 2


def test_homology_two_points():
    c = SimplicialComplex(ideal_from_sets(2, [[0, 1]]))
    assert reduced_homology_ranks(c, 0b11).nonzero() == {0: 1}


def test_homology_hollow_triangle():
    c = SimplicialComplex(ideal_from_sets(3, [[0, 1, 2]]))
    for field in ("gf2", "rat"):
        assert reduced_homology_ranks(c, 0b111, field).nonzero() == {1: 1}


def test_homology_full_simplex_and_empty_complex():
    c = SimplicialComplex(ideal_from_sets(4, [[3]]))
    assert reduced_homology_ranks(c, 0b0111).nonzero() == {}
    assert reduced_homology_ranks(c, 0).nonzero() == {-1: 1}
    # {x3} is a non-face, so on W={3} the complex is just {empty set}
    assert reduced_homology_ranks(c, 0b1000).nonzero() == {-1: 1}


def test_homology_matches_dense_rational_oracle():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 6)
        ideal = random_ideal(rng, n, rng.randint(1, 5))
        c = SimplicialComplex(ideal)
        w = rng.randrange(1 << n)
        expected = brute_reduced_homology(gens_sets(ideal), frozenset(bits.members(w)))
        for field in ("rat", "gf2"):
            prof = reduced_homology_ranks(c, w, field)
            assert {d: prof[d] for d in expected} == expected


def test_euler_characteristic_on_random_subcomplexes():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 8)
        ideal = random_ideal(rng, n, rng.randint(1, 6))
        c = SimplicialComplex(ideal)
        w = rng.randrange(1 << n)
        faces = c.faces_in(w)
        chi = sum((-1) ** (k - 1) * len(fs) for k, fs in enumerate(faces))
        prof = reduced_homology_ranks(c, w)
        assert chi == sum((-1) ** d * r for d, r in prof.nonzero().items())


def test_betti_table_principal():
    t = betti_table(ideal_from_sets(2, [[0, 1]]))
    assert t.entries == {(0, 0): 1, (1, 2): 1}
    assert (t.reg, t.pd) == (1, 1)


def test_betti_table_path_and_square(c4):
    t = betti_table(edge_ideal(families.path(2)))
    assert (t.pd, t.reg) == (2, 1)
    assert betti_table(cover_ideal(families.path(2))).reg == 1
    t = betti_table(edge_ideal(c4))
    assert (t.pd, t.depth) == (3, 1)


def test_betti_table_degenerate():
    with pytest.raises(DegenerateInputError):
        betti_table(minimalize([0], 3))
    with pytest.raises(DegenerateInputError):
        betti_table(minimalize([], 3))


def _hochster_brute(ideal):
    gens = gens_sets(ideal)
    acc = Counter()
    for w in range(1 << ideal.n):
        ws = frozenset(bits.members(w))
        for d, r in brute_reduced_homology(gens, ws).items():
            if r:
                acc[(len(ws) - d - 1, len(ws))] += r
    return dict(acc)


def test_betti_table_matches_brute_hochster():
    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(1, 5)
        ideal = random_ideal(rng, n, rng.randint(1, 5))
        if ideal.is_unit:
            continue
        assert betti_table(ideal, "rat").entries == _hochster_brute(ideal)


def _numerator_from_betti(table):
    coeffs = [0] * (table.n + 1)
    for (i, j), b in table.entries.items():
        coeffs[j] += (-1) ** i * b
    return coeffs


def test_alternating_betti_sum_is_hilbert_numerator():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 7)
        ideal = random_ideal(rng, n, rng.randint(1, 6))
        if ideal.is_unit:
            continue
        assert _numerator_from_betti(betti_table(ideal)) == hilbert_numerator(gens_sets(ideal), n)


def test_cone_pruning_is_exact():
    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(1, 7)
        ideal = random_ideal(rng, n, rng.randint(1, 6))
        if ideal.is_unit:
            continue
        assert betti_table(ideal).entries == betti_table(ideal, prune=False).entries


def test_parallel_sweep_is_identical():
    ideal = cover_ideal(families.cycle(8))
    assert betti_table(ideal, jobs=2).entries == betti_table(ideal).entries


def test_table_shape():
    t = betti_table(edge_ideal(families.cycle(6)))
    assert t[(0, 0)] == 1
    assert all(0 <= i <= j <= t.n for i, j in t.entries)
    assert t.rows()[0][0] == 1


def test_reg_pd_depth_dim_examples(c4):
    r = reg_pd_depth_dim(families.cycle(7))
    assert (r.depth_RmodI, r.pd_RmodI, r.reg_RmodJ, r.dim_RmodI, r.cm) == (2, 5, 4, 3, False)
    r = reg_pd_depth_dim(c4)
    assert (r.depth_RmodI, r.pd_RmodI, r.reg_RmodJ, r.dim_RmodI, r.cm) == (1, 3, 2, 2, False)
    r = reg_pd_depth_dim(families.path(1))
    assert (r.reg_RmodJ, r.pd_RmodI, r.depth_RmodI, r.dim_RmodI, r.cm) == (0, 1, 1, 1, True)


def test_isolated_vertices_raise_depth():
    base = reg_pd_depth_dim(families.path(2))
    padded = reg_pd_depth_dim(graph(5, (0, 1), (1, 2)))
    assert padded.pd_RmodI == base.pd_RmodI
    assert padded.depth_RmodI == base.depth_RmodI + 2


def test_depth_is_additive_over_disjoint_unions():
    rng = random.Random(12)
    for _ in range(15):
        a = families.random_graph(rng.randint(2, 4), 0.6, rng.randrange(10**6))
        b = families.random_graph(rng.randint(2, 4), 0.6, rng.randrange(10**6))
        if not a.m or not b.m:
            continue
        union = Graph.from_edges(a.n + b.n, a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()])
        assert reg_pd_depth_dim(union).depth_RmodI == (reg_pd_depth_dim(a).depth_RmodI
                                                       + reg_pd_depth_dim(b).depth_RmodI)


def test_bound_examples():
    j_p2 = ideal_from_sets(3, [[1], [0, 2]])
    assert induced_matching_bound(j_p2) == 1
    assert two_collage_bound(j_p2) == 1
    single = ideal_from_sets(5, [[0, 1, 2, 3]])
    assert induced_matching_bound(single) == 3
    assert two_collage_bound(single) == 3
    assert induced_matching_bound(ideal_from_sets(3, [[0, 1], [1, 2]])) == 1
    assert two_collage_bound(ideal_from_sets(4, [[0, 2], [1, 3]])) == 2


def test_bounds_match_subset_brute_force():
    rng = random.Random(10)
    for _ in range(150):
        n = rng.randint(1, 6)
        ideal = random_ideal(rng, n, rng.randint(1, 7))
        if ideal.is_unit:
            continue
        gens = gens_sets(ideal)
        assert induced_matching_bound(ideal) == brute_induced_matching(gens)
        assert two_collage_bound(ideal) == brute_two_collage(gens)


def test_invariants_over_small_graphs():
    for g in iso_reps(6, with_edges=True):
        j = cover_ideal(g)
        t_i_rat = betti_table(edge_ideal(g), "rat")
        t_j_rat = betti_table(j, "rat")
        t_i = betti_table(edge_ideal(g))
        t_j = betti_table(j)
        # GF(2) and Q agree at this size
        assert t_i.entries == t_i_rat.entries and t_j.entries == t_j_rat.entries, g
        assert t_j.reg + 1 == t_i.pd
        assert induced_matching_bound(j) <= t_j.reg <= two_collage_bound(j)
        assert t_j.reg >= minimal_covers(g).bight - 1


def test_field_matters_on_projective_plane():
    # six-vertex triangulation of RP^2: H_1 = Z/2, visible only in characteristic 2
    facets = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]
    facet_masks = [bits.from_iter(int(c) - 1 for c in f) for f in facets]
    non_faces = [w for w in range(1, 1 << 6) if not any(w & ~f == 0 for f in facet_masks)]
    ideal = minimalize(non_faces, 6)
    c = SimplicialComplex(ideal)
    assert reduced_homology_ranks(c, 0b111111, "gf2").nonzero() == {1: 1, 2: 1}
    assert reduced_homology_ranks(c, 0b111111, "rat").nonzero() == {}
    assert betti_table(ideal, "gf2").entries.get((4, 6)) == 1
    assert (4, 6) not in betti_table(ideal, "rat").entries
