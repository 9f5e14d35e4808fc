import pytest

from erdosham.libs.common import HamiltonianInput
from erdosham.libs.constructions import build_H, build_Hprime
from erdosham.libs.graph import complete_graph, cycle_graph, from_edge_list, star_graph
from erdosham.libs.hamilton import is_hamiltonian
from erdosham.libs.saturation import check_ore_property, is_saturated, saturate


def test_is_saturated():
    assert is_saturated(build_H(5, 2).graph)
    assert not is_saturated(star_graph(3))
    assert not is_saturated(cycle_graph(5))
    assert not is_saturated(complete_graph(5))


def test_extremal_graphs_are_saturated():
    for n, d in [(7, 1), (7, 2), (9, 2), (9, 3)]:
        assert is_saturated(build_H(n, d).graph)
        assert is_saturated(build_Hprime(n, d).graph)


def test_saturate_star():
    closure = saturate(star_graph(3))
    assert set(closure.edges()) == {(0, 1), (0, 2), (0, 3), (1, 2)}
    assert is_saturated(closure)


def test_saturate_fixed_point():
    g = build_H(5, 2).graph
    assert saturate(g) == g


def test_saturate_rejects_hamiltonian_input():
    with pytest.raises(HamiltonianInput) as excinfo:
        saturate(cycle_graph(4))
    assert "HamiltonianInput" in str(excinfo.value)


def test_saturate_keeps_input_edges():
    g = from_edge_list(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
    closure = saturate(g)
    assert g.is_subgraph_of(closure)
    assert is_hamiltonian(closure) is None
    assert is_saturated(closure)
    assert check_ore_property(closure) is None


def test_check_ore_property():
    assert check_ore_property(build_H(4, 1).graph) is None
    assert check_ore_property(build_H(11, 3).graph) is None
    g = complete_graph(6)
    for i in (0, 2, 4):
        g = g.without_edge(i, i + 1)
    assert check_ore_property(g) == (0, 1)
