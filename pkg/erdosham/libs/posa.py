"""
Pósa-type degree conditions.

posa_witness_max returns the largest k <= floor((n-1)/2) with at least k
vertices of degree at most k. The certifier relies on the maximal choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from erdosham.libs.common import ParameterOutOfRange
from erdosham.libs.graph import Graph, VertexSet


@dataclass(frozen=True)
class PosaWitness:
    k: int
    D: VertexSet

    def holds_in(self, g: Graph) -> bool:
        if self.k < 1 or self.k > (g.n - 1) // 2 or len(self.D) < self.k:
            return False
        return all(g.degree(v) <= self.k for v in self.D)


def low_degree_set(g: Graph, k: int) -> VertexSet:
    return VertexSet.of(v for v, deg in enumerate(g.degrees()) if deg <= k)


def posa_witness_max(g: Graph) -> Optional[PosaWitness]:
    if g.n < 3:
        raise ParameterOutOfRange(f"Pósa witness needs n >= 3, got {g.n}")
    for k in range((g.n - 1) // 2, 0, -1):
        D = low_degree_set(g, k)
        if len(D) >= k:
            witness = PosaWitness(k=k, D=D)
            assert witness.holds_in(g)
            return witness
    return None


def posa2_condition_holds(g: Graph, ell: int) -> bool:
    """d(u) + d(v) >= n + ell for every non-edge uv."""
    if ell < 1 or ell >= g.n:
        raise ParameterOutOfRange(f"ell must satisfy 1 <= ell < n={g.n}, got {ell}")
    degrees = g.degrees()
    return all(degrees[u] + degrees[v] >= g.n + ell for u, v in g.non_edges())
