"""
Saturated graphs: nonhamiltonian, but adding any missing edge creates a
hamiltonian cycle.
"""

from __future__ import annotations

from typing import Optional

from erdosham.libs.common import HamiltonianInput, ParameterOutOfRange, ham_info
from erdosham.libs.graph import Graph
from erdosham.libs.hamilton import (
    DP_MAX_VERTICES,
    VECTOR_MIN_VERTICES,
    CycleWitness,
    is_hamiltonian,
)


def _cycle_pairs(witness: CycleWitness) -> list[tuple[int, int]]:
    return sorted(witness.edges())


def _survives(cycle: list[tuple[int, int]], g: Graph, extra: tuple[int, int]):
    """Is every edge of the cached cycle present in g + extra?"""
    return all(pair == extra or g.has_edge(*pair) for pair in cycle)


def is_saturated(
    g: Graph,
    dp_max_vertices: int = DP_MAX_VERTICES,
    vector_min_vertices: int = VECTOR_MIN_VERTICES,
    cancel=None,
) -> bool:
    if g.n < 3:
        raise ParameterOutOfRange(f"saturation needs n >= 3, got {g.n}")
    if is_hamiltonian(g, dp_max_vertices, vector_min_vertices, cancel) is not None:
        return False
    for u, v in g.non_edges():
        bigger = g.with_edge(u, v)
        if is_hamiltonian(bigger, dp_max_vertices, vector_min_vertices, cancel) is None:
            return False
    return True


def saturate(
    g: Graph,
    dp_max_vertices: int = DP_MAX_VERTICES,
    vector_min_vertices: int = VECTOR_MIN_VERTICES,
    cancel=None,
) -> Graph:
    """
    Deterministic saturated supergraph of a nonhamiltonian g.

    Non-edges are scanned in lexicographic order and an edge is kept when the
    graph stays nonhamiltonian; passes repeat until one adds nothing. A cycle
    found in h + uv is also a cycle in every supergraph of h + uv, so each
    rejecting cycle is cached and checked before a new search.
    """
    if g.n < 3:
        raise ParameterOutOfRange(f"saturation needs n >= 3, got {g.n}")
    witness = is_hamiltonian(g, dp_max_vertices, vector_min_vertices, cancel)
    if witness is not None:
        raise HamiltonianInput(f"input already has the cycle {list(witness.order)}")

    current = g
    cached: list[list[tuple[int, int]]] = []
    passes = 0
    while True:
        passes += 1
        added = 0
        for u, v in list(current.non_edges()):
            if any(_survives(cycle, current, (u, v)) for cycle in cached):
                continue
            bigger = current.with_edge(u, v)
            found = is_hamiltonian(bigger, dp_max_vertices, vector_min_vertices, cancel)
            if found is None:
                current = bigger
                added += 1
            else:
                cached.append(_cycle_pairs(found))
        ham_info(f"saturate: pass {passes} added {added} edges")
        if not added:
            return current


def check_ore_property(g: Graph) -> Optional[tuple[int, int]]:
    """First non-edge uv (lexicographic) with d(u) + d(v) > n - 1, if any."""
    degrees = g.degrees()
    for u, v in g.non_edges():
        if degrees[u] + degrees[v] > g.n - 1:
            return (u, v)
    return None
