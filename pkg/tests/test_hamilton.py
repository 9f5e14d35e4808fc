import time

import numpy as np
import pytest

from erdosham.libs.canonical import enumerate_graphs
from erdosham.libs.common import ForestError, ParameterOutOfRange, SearchCancelled
from erdosham.libs.constructions import build_H, build_Hprime
from erdosham.libs.graph import (
    complete_graph,
    cycle_graph,
    decode_graph6,
    from_edge_list,
    path_graph,
    star_graph,
)
from erdosham.libs.hamilton import (
    HAMILTONIAN,
    LinearForest,
    brute_force_cycle_through_forest,
    brute_force_hamiltonian,
    dirac_ore_fast_check,
    ham_cycle_through_forest,
    ham_path_between,
    is_hamiltonian,
    palmer_cycle,
    scattering_obstruction,
    validate_cycle,
    validate_path,
)
from erdosham.libs.harness import random_graph, random_linear_forest

# scalar DP, vectorised DP and depth-first search
ENGINES = [
    {},
    {"vector_min_vertices": 3},
    {"dp_max_vertices": 2},
]


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def c5_with_chord():
    return cycle_graph(5).with_edge(0, 2)


@pytest.mark.parametrize("engine", ENGINES)
def test_is_hamiltonian_examples(engine):
    witness = is_hamiltonian(cycle_graph(5), **engine)
    assert witness is not None
    assert validate_cycle(cycle_graph(5), witness.order)
    assert witness.edges() == set(cycle_graph(5).edges())
    assert is_hamiltonian(build_H(11, 3).graph, **engine) is None
    assert is_hamiltonian(petersen(), **engine) is None


def test_is_hamiltonian_small_graphs():
    assert is_hamiltonian(complete_graph(1)) is None
    assert is_hamiltonian(complete_graph(2)) is None
    assert is_hamiltonian(complete_graph(3)) is not None


@pytest.mark.parametrize("engine", ENGINES)
def test_is_hamiltonian_matches_brute_force(engine):
    for n in range(3, 8):
        for g in enumerate_graphs(n):
            witness = is_hamiltonian(g, **engine)
            assert (witness is None) == (brute_force_hamiltonian(g) is None)
            if witness is not None:
                assert validate_cycle(g, witness.order)


@pytest.mark.parametrize("engine", ENGINES)
def test_cycle_through_forest_examples(engine):
    k5 = complete_graph(5)
    forest = LinearForest.of([(0, 1), (1, 2)])
    witness = ham_cycle_through_forest(k5, forest, **engine)
    assert validate_cycle(k5, witness.order, forest.edges)

    c5 = cycle_graph(5)
    witness = ham_cycle_through_forest(c5, LinearForest.of([(0, 1), (2, 3)]), **engine)
    assert witness.edges() == set(c5.edges())

    forest = LinearForest.of([(0, 2), (3, 4)])
    assert ham_cycle_through_forest(c5_with_chord(), forest, **engine) is None
    assert brute_force_cycle_through_forest(c5_with_chord(), forest) is None


@pytest.mark.parametrize("engine", ENGINES)
def test_cycle_through_forest_starting_on_a_forest_path(engine):
    # vertex 0 is the end of a forced edge and vertex 3 sits inside a path
    g = complete_graph(7).without_edge(0, 5).without_edge(1, 4)
    forest = LinearForest.of([(0, 6), (2, 3), (3, 4)])
    witness = ham_cycle_through_forest(g, forest, **engine)
    assert validate_cycle(g, witness.order, forest.edges)


@pytest.mark.parametrize("engine", ENGINES)
def test_cycle_through_forest_needs_the_forced_edge(engine):
    # vertex 3 has one graph neighbour outside its forest path
    g = decode_graph6("Cz")
    forest = LinearForest.of([(0, 2), (2, 3)])
    assert brute_force_cycle_through_forest(g, forest) is not None
    witness = ham_cycle_through_forest(g, forest, **engine)
    assert validate_cycle(g, witness.order, forest.edges)


def test_cycle_through_forest_on_depth_first_search():
    g = complete_graph(26)
    for v in range(26):
        if v not in (1, 2, 3):
            g = g.without_edge(3, v)
    forest = LinearForest.of([(0, 2), (2, 3)])
    witness = ham_cycle_through_forest(g, forest)
    assert validate_cycle(g, witness.order, forest.edges)


@pytest.mark.parametrize("engine", ENGINES)
def test_cycle_through_random_forests_matches_brute_force(engine):
    rng = np.random.default_rng(2024)
    cases = 0
    while cases < 200:
        n = int(rng.integers(4, 8))
        g = random_graph(n, float(rng.uniform(0.4, 0.9)), rng)
        forest = random_linear_forest(g, int(rng.integers(1, n - 1)), rng)
        if forest is None:
            continue
        cases += 1
        ours = ham_cycle_through_forest(g, forest, **engine)
        assert (ours is None) == (
            brute_force_cycle_through_forest(g, forest) is None
        )
        if ours is not None:
            assert validate_cycle(g, ours.order, forest.edges)


def test_cycle_through_spanning_path():
    c6 = cycle_graph(6)
    forest = LinearForest.of([(i, i + 1) for i in range(5)])
    witness = ham_cycle_through_forest(c6, forest)
    assert validate_cycle(c6, witness.order, forest.edges)
    assert ham_cycle_through_forest(path_graph(6).with_edge(0, 2), forest) is None


def test_cycle_through_forest_matches_brute_force():
    forests = [
        [(0, 1)],
        [(0, 1), (2, 3)],
        [(1, 2), (2, 3)],
        [(0, 4), (1, 5), (2, 3)],
    ]
    for g in enumerate_graphs(6, min_edges=9):
        for edges in forests:
            if not all(g.has_edge(u, v) for u, v in edges):
                continue
            forest = LinearForest.of(edges)
            ours = ham_cycle_through_forest(g, forest)
            assert (ours is None) == (
                brute_force_cycle_through_forest(g, forest) is None
            )


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 1), (0, 2), (0, 3)],  # degree 3
        [(0, 1), (1, 2), (0, 2)],  # cycle
        [(0, 7)],  # outside the vertex range
    ],
)
def test_cycle_through_forest_rejects_bad_forests(edges):
    with pytest.raises(ForestError):
        ham_cycle_through_forest(complete_graph(5), LinearForest.of(edges))


def test_cycle_through_forest_needs_graph_edges():
    with pytest.raises(ForestError):
        ham_cycle_through_forest(cycle_graph(5), LinearForest.of([(0, 2)]))


@pytest.mark.parametrize("engine", ENGINES)
def test_ham_path_between(engine):
    path = ham_path_between(complete_graph(4), 0, 1, **engine)
    assert validate_path(complete_graph(4), path, 0, 1)
    assert ham_path_between(path_graph(3), 0, 2, **engine) == (0, 1, 2)
    assert ham_path_between(star_graph(3), 1, 2, **engine) is None


def test_ham_path_between_rejects_equal_endpoints():
    with pytest.raises(ParameterOutOfRange):
        ham_path_between(complete_graph(4), 2, 2)
    with pytest.raises(ParameterOutOfRange):
        ham_path_between(complete_graph(4), 0, 9)


def test_dirac_ore_fast_check():
    assert dirac_ore_fast_check(complete_graph(6)) == HAMILTONIAN
    assert dirac_ore_fast_check(cycle_graph(6)) is None
    assert dirac_ore_fast_check(build_H(10, 2).graph) is None


def test_palmer_cycle():
    for n in range(3, 12):
        g = complete_graph(n)
        for i in range(0, n - 1, 2):
            g = g.without_edge(i, i + 1)
        if dirac_ore_fast_check(g) != HAMILTONIAN:
            continue
        assert validate_cycle(g, palmer_cycle(g))


def test_scattering_obstruction():
    s = scattering_obstruction(build_H(11, 3).graph)
    assert s is not None
    assert len(build_H(11, 3).graph.component_masks(s.bits)) > len(s)
    assert scattering_obstruction(cycle_graph(7)) is None


def test_cancel_token_stops_search():
    class Fired:
        def is_set(self):
            return True

    # 2-connected, no cheap obstruction, needs a full search
    g = petersen()
    with pytest.raises(SearchCancelled):
        is_hamiltonian(g, vector_min_vertices=3, cancel=Fired())


def test_performance():
    n = 22
    g = complete_graph(n)
    for i in range(0, n, 2):
        g = g.without_edge(i, i + 1)
    started = time.monotonic()
    assert validate_cycle(g, is_hamiltonian(g).order)
    assert is_hamiltonian(build_H(22, 5).graph) is None
    assert is_hamiltonian(build_Hprime(22, 5).graph) is None
    assert time.monotonic() - started < 5
