"""v-numbers, regularity and cover invariants of edge and cover ideals of graphs."""

from .betti import (
    BettiTable,
    HomologyProfile,
    SimplicialComplex,
    betti_table,
    induced_matching_bound,
    reduced_homology_ranks,
    reg_pd_depth_dim,
    two_collage_bound,
)
from .covers import CoverCatalog, cover_ideal, is_cover, maximal_independent_sets, minimal_covers
from .errors import (
    CrossCheckError,
    DegenerateInputError,
    GraphParseError,
    InvalidPrimeError,
    ResourceCapError,
    VertexRangeError,
)
from .families import complete_multipartite, cycle, glued_cycles, path, random_graph
from .graph import Graph, has_dominated_edge, induced_subgraph, is_chordal, is_complete_multipartite, neighbors
from .ideal import PrimeSupport, SqFreeIdeal, alexander_dual, colon, edge_ideal, is_prime, minimal_primes, minimalize
from .io import parse_graph, to_edgelist, to_graph6
from .report import InvariantReport, compute_report
from .vnum import VWitness, cover_v_number, edge_v_number, local_v_number, lower_bound_check, v_number

__version__ = "0.1.0"
