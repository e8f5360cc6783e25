"""Exact computation of depth of symbolic powers of edge ideals."""

from .betti import BettiTable, betti_table, depth, depth_sequence, pd, stabilization_index
from .bipartite import BipartiteWitness, bc, bc_prime, bouquet_number, maximal_induced_bipartite
from .graph import (Graph, WhiskerSpec, edge_ideal, make_complete, make_cycle, make_example_w,
                    make_path, make_whisker, minimal_vertex_covers, parse_graph)
from .linalg import FieldSpec
from .monomial import Monomial, MonomialIdeal
from .simplicial import SimplicialComplex, reduced_homology_dims
from .symbolic import symbolic_power

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "betti_table", "depth", "depth_sequence", "pd", "stabilization_index",
    "BipartiteWitness", "bc", "bc_prime", "bouquet_number", "maximal_induced_bipartite",
    "Graph", "WhiskerSpec", "edge_ideal", "make_complete", "make_cycle", "make_example_w",
    "make_path", "make_whisker", "minimal_vertex_covers", "parse_graph",
    "FieldSpec", "Monomial", "MonomialIdeal", "SimplicialComplex", "reduced_homology_dims",
    "symbolic_power",
]
