import random

import networkx as nx
import pytest

from erdosham.libs.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_key,
    canonical_labeling,
    enumerate_graphs,
    isomorphism,
)
from erdosham.libs.common import SizeCapExceeded
from erdosham.libs.constructions import build_H
from erdosham.libs.graph import cycle_graph, decode_graph6, encode_graph6, from_edge_list


def random_graph(n, p, rnd):
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p]
    )


def shuffled(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    return g.relabel(perm)


def to_nx(g):
    return nx.from_graph6_bytes(encode_graph6(g).encode())


def test_canonical_key_is_label_invariant():
    rnd = random.Random(7)
    for _ in range(40):
        g = random_graph(rnd.randint(3, 10), rnd.random(), rnd)
        assert canonical_key(g) == canonical_key(shuffled(g, rnd))


def test_canonical_labeling_is_a_permutation():
    g = build_H(9, 3).graph
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(9))
    assert canonical_form(g) == g.relabel(perm)


def test_are_isomorphic_against_networkx():
    rnd = random.Random(11)
    for _ in range(60):
        n = rnd.randint(4, 8)
        g = random_graph(n, 0.5, rnd)
        other = random_graph(n, 0.5, rnd) if rnd.random() < 0.5 else shuffled(g, rnd)
        assert are_isomorphic(g, other) == nx.is_isomorphic(to_nx(g), to_nx(other))


def test_same_degrees_different_graphs():
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(cycle_graph(6), two_triangles)
    assert isomorphism(cycle_graph(6), two_triangles) is None


def test_isomorphism_mapping():
    rnd = random.Random(3)
    for _ in range(20):
        g = random_graph(8, 0.4, rnd)
        other = shuffled(g, rnd)
        mapping = isomorphism(g, other)
        assert g.relabel(mapping) == other


@pytest.mark.parametrize(
    "n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)]
)
def test_enumeration_counts(n, count):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == count
    assert len({g.rows for g in graphs}) == count


@pytest.mark.slow
def test_enumeration_count_8():
    count = 0
    for g in enumerate_graphs(8):
        count += 1
        assert decode_graph6(encode_graph6(g)) == g
    assert count == 12346


def test_enumeration_emits_canonical_forms():
    for g in enumerate_graphs(6):
        assert canonical_form(g) == g


def test_enumeration_edge_bounds():
    everything = list(enumerate_graphs(5))
    sparse = list(enumerate_graphs(5, max_edges=3))
    dense = list(enumerate_graphs(5, min_edges=7))
    assert len(sparse) == 8
    assert len(dense) == 8
    assert {g.rows for g in sparse} == {
        g.rows for g in everything if g.edge_count <= 3
    }
    assert {g.rows for g in dense} == {g.rows for g in everything if g.edge_count >= 7}


def test_enumeration_matches_labelled_oracle():
    # all 2^10 labelled graphs on 5 vertices, deduplicated by networkx
    pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    buckets = {}
    for bits in range(1 << len(pairs)):
        g = to_nx(from_edge_list(5, [p for i, p in enumerate(pairs) if bits >> i & 1]))
        seen = buckets.setdefault(tuple(sorted(d for _, d in g.degree())), [])
        if not any(nx.is_isomorphic(g, other) for other in seen):
            seen.append(g)
    classes = [g for seen in buckets.values() for g in seen]
    ours = [to_nx(g) for g in enumerate_graphs(5)]
    assert len(ours) == len(classes)
    for g in ours:
        assert sum(nx.is_isomorphic(g, c) for c in classes) == 1


def test_graph6_round_trip_on_enumerated_graphs():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g


def test_enumeration_size_cap():
    with pytest.raises(SizeCapExceeded):
        next(enumerate_graphs(11))
