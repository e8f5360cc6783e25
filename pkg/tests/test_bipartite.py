import time

import pytest
from hypothesis import given

from oracles import brute_maximal_bipartite
from strategies import graphs
from symdepth.bipartite import (BouquetError, bc, bc_prime, bouquet_number, is_maximal_bipartite,
                                maximal_induced_bipartite, witness_for, with_bouquets)
from symdepth.graph import (Graph, GraphError, connected_components, make_cycle, make_example_w,
                            make_path, make_whisker, whisker_leaves)


def test_c5_witnesses():
    ws = maximal_induced_bipartite(make_cycle(5))
    assert len(ws) == 5
    assert all(len(w.vertices) == 4 and w.c == 1 and not w.isolated for w in ws)
    assert {w.vertices for w in ws} == set(brute_maximal_bipartite(5, make_cycle(5).edges))


def test_connected_bipartite_single_witness():
    G = make_path(6)
    ws = maximal_induced_bipartite(G)
    assert [w.vertices for w in ws] == [frozenset(G.vertices)]
    assert bc(G)[0] == bc_prime(G)[0] == 1


def test_w3_witnesses():
    W = make_whisker((1, 1, 1))
    leaves = {4, 5, 6}
    ws = maximal_induced_bipartite(W)
    assert {w.vertices for w in ws} == {frozenset(leaves | {i, j}) for i, j in [(1, 2), (1, 3), (2, 3)]}


def test_bc_examples():
    assert bc(make_cycle(5))[0] == 1
    assert bc(make_whisker((1, 1, 1)))[0] == 2
    assert bc(make_example_w())[0] == 3


def test_bouquet_examples():
    G = make_cycle(5)
    w = maximal_induced_bipartite(G)[0]
    assert bouquet_number(G, w) == 0
    W = make_whisker((2, 2, 2))
    leaves = whisker_leaves((2, 2, 2))
    H = witness_for(W, {1, 2, *leaves[0], *leaves[1], *leaves[2]})
    assert set(H.isolated) == set(leaves[2])
    assert bouquet_number(W, H) == 1
    assert bc_prime(make_example_w())[0] == 2


def test_bouquet_undefined_names_vertex():
    # vertex 5 is isolated in H and has no neighbour outside H
    G = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3)])
    H = witness_for(G, {1, 2, 4, 5})
    with pytest.raises(BouquetError, match="4"):
        bouquet_number(G, H)


def test_bc_prime_examples():
    assert bc_prime(make_whisker((1, 1, 1)))[0] == 2
    assert bc_prime(make_example_w())[0] == 2
    assert bc_prime(make_path(4))[0] == 1


def test_errors():
    with pytest.raises(GraphError):
        maximal_induced_bipartite(Graph.from_edges(3, []))
    with pytest.raises(GraphError):
        maximal_induced_bipartite(make_cycle(25))


def test_example_w_is_instant():
    t0 = time.perf_counter()
    bc(make_example_w())
    bc_prime(make_example_w())
    assert time.perf_counter() - t0 < 1.0


@given(graphs(n_max=9, min_edges=1))
def test_enumeration_matches_brute_force(G):
    ws = maximal_induced_bipartite(G)
    assert {w.vertices for w in ws} == set(brute_maximal_bipartite(G.n, G.edges))
    for w in ws:
        assert is_maximal_bipartite(G, w.vertices)
        assert w.c_H == w.c + len(w.isolated)


@given(graphs(n_max=8, min_edges=1))
def test_bc_prime_at_most_bc(G):
    if len(connected_components(G)) != 1:
        return
    b, _ = bc(G)
    bp_, w = bc_prime(G)
    assert 1 <= bp_ <= b
    assert with_bouquets(G, w).c_prime == bp_
