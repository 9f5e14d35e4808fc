import random

import networkx as nx
import pytest

from erdosham.libs.common import Graph6Error, GraphError
from erdosham.libs.constructions import build_H, build_Hprime
from erdosham.libs.graph import (
    Graph,
    VertexSet,
    complete_graph,
    cycle_graph,
    decode_graph6,
    empty_graph,
    encode_graph6,
    from_edge_list,
    path_graph,
    star_graph,
)


def random_graph(n, p, seed):
    rnd = random.Random(seed)
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p]
    )


def test_from_edge_list():
    k3 = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    assert k3 == complete_graph(3)
    assert k3.edge_count == 3

    empty = from_edge_list(4, [])
    assert empty.edge_count == 0
    assert empty.min_degree == 0

    c5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.degrees() == [2] * 5


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1
    assert list(g.edges()) == [(0, 1)]


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 3)]),
        (3, [(-1, 2)]),
        (3, [(1, 1)]),
        (65, []),
        (0, []),
    ],
)
def test_from_edge_list_rejects(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(3, [0b010, 0b000, 0b000])


def test_degree_sum_is_twice_edge_count():
    for seed in range(20):
        g = random_graph(12, 0.4, seed)
        assert sum(g.degrees()) == 2 * g.edge_count
        assert all(g.degree(v) == len(g.neighbors(v)) for v in range(g.n))


def test_with_edge():
    c4 = cycle_graph(4)
    chorded = c4.with_edge(0, 2)
    assert chorded.edge_count == 5
    assert c4.edge_count == 4
    assert complete_graph(3).with_edge(0, 1) == complete_graph(3)
    assert empty_graph(2).with_edge(0, 1) == complete_graph(2)
    with pytest.raises(GraphError):
        c4.with_edge(1, 1)


def test_without_edge():
    assert complete_graph(3).without_edge(0, 1).edge_count == 2
    assert path_graph(3).without_edge(0, 2) == path_graph(3)


def test_complement():
    assert complete_graph(4).complement() == empty_graph(4)
    c5 = cycle_graph(5)
    assert nx.is_isomorphic(
        nx.from_graph6_bytes(encode_graph6(c5.complement()).encode()),
        nx.cycle_graph(5),
    )
    k3_plus_isolated = from_edge_list(4, [(1, 2), (1, 3), (2, 3)])
    assert star_graph(3).complement() == k3_plus_isolated


def test_union_neighborhood():
    h = build_H(11, 3)
    assert h.graph.union_neighborhood(h.parts["D"]) == h.parts["S"]
    assert cycle_graph(5).union_neighborhood(VertexSet()) == VertexSet()
    assert cycle_graph(5).union_neighborhood(VertexSet.of([0])) == VertexSet.of([1, 4])


def test_is_clique():
    assert complete_graph(5).is_clique(VertexSet.of([1, 2, 4]))
    assert not cycle_graph(5).is_clique(VertexSet.of([0, 1, 2]))
    h = build_H(11, 3)
    assert h.graph.is_clique(h.parts["A"])


def test_is_independent():
    h = build_H(11, 3)
    assert h.graph.is_independent(h.parts["D"])
    assert not complete_graph(3).is_independent(VertexSet.of([0, 1]))
    assert complete_graph(5).is_independent(VertexSet.of([3]))


def test_is_two_connected():
    assert cycle_graph(5).is_two_connected()
    assert not path_graph(3).is_two_connected()
    assert not build_Hprime(5, 2).graph.is_two_connected()


def test_is_two_connected_against_networkx():
    for seed in range(30):
        g = random_graph(9, 0.35, seed)
        other = nx.from_graph6_bytes(encode_graph6(g).encode())
        assert g.is_two_connected() == nx.is_biconnected(other)


def test_components():
    g = from_edge_list(6, [(0, 1), (2, 3), (3, 4)])
    assert g.components() == [
        VertexSet.of([0, 1]),
        VertexSet.of([2, 3, 4]),
        VertexSet.of([5]),
    ]
    assert not g.is_connected()
    assert cycle_graph(6).is_connected()


def test_induced_subgraph_and_relabel():
    h = build_H(7, 2)
    sub, labels = h.graph.induced_subgraph(h.parts["A"])
    assert sub == complete_graph(5)
    assert labels == [0, 1, 2, 3, 4]

    perm = [3, 0, 4, 1, 2]
    p5 = path_graph(5)
    moved = p5.relabel(perm)
    assert all(moved.has_edge(perm[u], perm[v]) for u, v in p5.edges())
    with pytest.raises(GraphError):
        p5.relabel([0, 0, 1, 2, 3])


def test_is_subgraph_of():
    assert cycle_graph(5).is_subgraph_of(complete_graph(5))
    assert not complete_graph(5).is_subgraph_of(cycle_graph(5))
    assert not cycle_graph(4).is_subgraph_of(complete_graph(5))


def test_vertex_set_algebra():
    for a_bits in range(16):
        for b_bits in range(16):
            a, b = VertexSet(a_bits), VertexSet(b_bits)
            assert set(a | b) == set(a) | set(b)
            assert set(a & b) == set(a) & set(b)
            assert set(a - b) == set(a) - set(b)
            assert len(a) == len(set(a))
            assert a.issubset(a | b)


def test_graph6_known_strings():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(complete_graph(2)) == "A_"
    assert encode_graph6(empty_graph(1)) == "@"
    assert decode_graph6("Bw") == complete_graph(3)
    assert decode_graph6(b">>graph6<<A_") == complete_graph(2)


@pytest.mark.parametrize("n", [2, 5, 9, 17, 62, 63, 64])
def test_graph6_matches_networkx(n):
    g = random_graph(n, 0.5, n)
    ours = encode_graph6(g)
    theirs = nx.to_graph6_bytes(
        nx.from_graph6_bytes(ours.encode()), header=False
    ).strip()
    assert ours.encode() == theirs
    assert decode_graph6(theirs) == g


@pytest.mark.parametrize(
    "data",
    [
        "",
        "Bw?",  # trailing garbage
        "B",  # truncated body
        "Bx",  # non-zero padding
        "C\x7fww",  # byte outside 63..126
        "~???",  # extended header for a small n
        "Bé",
    ],
)
def test_graph6_rejects(data):
    with pytest.raises(Graph6Error):
        decode_graph6(data)
