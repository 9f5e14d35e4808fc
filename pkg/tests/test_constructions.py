from math import comb

import pytest

from erdosham.libs.canonical import are_isomorphic, isomorphism
from erdosham.libs.common import GraphError, ParameterOutOfRange
from erdosham.libs.constructions import (
    Family,
    build,
    build_H,
    build_Hprime,
    build_K_minus_clique,
    embed_H,
    embed_Hprime,
)
from erdosham.libs.formulas import h, hprime_edges, max_d
from erdosham.libs.graph import VertexSet, from_edge_list
from erdosham.libs.hamilton import is_hamiltonian


def test_build_H():
    h11 = build_H(11, 3)
    assert h11.graph.edge_count == 37
    assert h11.graph.min_degree == 3
    assert h11.parts["D"] == VertexSet.of([8, 9, 10])
    assert h11.parts["S"] == VertexSet.of([0, 1, 2])
    assert build_H(5, 2).graph.edge_count == 7
    k3_pendant = from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert build_H(4, 1).graph == k3_pendant


def test_build_Hprime():
    bowtie = build_Hprime(5, 2)
    assert bowtie.graph.edge_count == 6
    assert bowtie.cut_vertex == 2
    assert build_Hprime(11, 3).graph.edge_count == 34
    assert are_isomorphic(build_Hprime(10, 1).graph, build_H(10, 1).graph)


def test_build_K_minus_clique():
    assert build_K_minus_clique(7).graph.edge_count == 15 == h(7, 3)
    assert build_K_minus_clique(4).graph.edge_count == 3
    k5 = build_K_minus_clique(5).graph
    assert k5.edge_count == 7 == h(5, 2)
    assert are_isomorphic(k5, build_H(5, 2).graph)


@pytest.mark.parametrize("n, d", [(2, 1), (7, 0), (7, 4), (10, 5)])
def test_build_rejects_out_of_range(n, d):
    with pytest.raises(ParameterOutOfRange):
        build_H(n, d)
    with pytest.raises(ParameterOutOfRange):
        build_Hprime(n, d)


def test_build_dispatch():
    assert build(Family.H, 9, 2).graph == build_H(9, 2).graph
    assert build(Family.HPRIME, 9, 2).graph == build_Hprime(9, 2).graph
    assert build(Family.K_MINUS_CLIQUE, 9).graph == build_K_minus_clique(9).graph
    with pytest.raises(ParameterOutOfRange):
        build(Family.H, 9)


def test_edge_counts_and_min_degree():
    for n in range(3, 41):
        for d in range(1, max_d(n) + 1):
            hg = build_H(n, d).graph
            hp = build_Hprime(n, d).graph
            assert hg.edge_count == h(n, d)
            assert hp.edge_count == hprime_edges(n, d) == comb(n - d, 2) + comb(d + 1, 2)
            assert hg.min_degree == d
            assert hp.min_degree == d


def test_constructions_are_nonhamiltonian():
    for n in range(3, 17):
        assert is_hamiltonian(build_K_minus_clique(n).graph) is None
        for d in range(1, max_d(n) + 1):
            assert is_hamiltonian(build_H(n, d).graph) is None
            assert is_hamiltonian(build_Hprime(n, d).graph) is None


def test_embed_matches_build():
    built = build_H(9, 3)
    assert embed_H(9, built.parts["D"], built.parts["S"]) == built.graph
    prime = build_Hprime(9, 3)
    assert embed_Hprime(9, prime.parts["B"], prime.cut_vertex) == prime.graph


def test_embed_on_other_labels():
    g = embed_H(7, VertexSet.of([0, 3]), VertexSet.of([1, 6]))
    assert are_isomorphic(g, build_H(7, 2).graph)
    assert g.neighbors(0) == VertexSet.of([1, 6])
    with pytest.raises(GraphError):
        embed_H(7, VertexSet.of([0, 1]), VertexSet.of([1, 2]))
    with pytest.raises(GraphError):
        embed_Hprime(7, VertexSet.of([4, 5, 6]), 0)


@pytest.mark.parametrize("n", range(5, 16, 2))
def test_K_minus_clique_is_H_at_odd_n(n):
    kminus = build_K_minus_clique(n).graph
    extremal = build_H(n, (n - 1) // 2).graph
    mapping = isomorphism(kminus, extremal)
    assert mapping is not None
    assert sorted(mapping) == list(range(n))
    assert kminus.relabel(mapping) == extremal
