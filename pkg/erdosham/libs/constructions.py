"""
The extremal graphs H_{n,d}, H'_{n,d} and K_n - E(K_{ceil((n+1)/2)}).

The build_* functions use fixed canonical labelings so certificates and
graph6 output are reproducible. embed_H and embed_Hprime build the same
graphs on arbitrary labelings and are what certificates are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from erdosham.libs.common import GraphError, ParameterOutOfRange
from erdosham.libs.formulas import max_d
from erdosham.libs.graph import Graph, VertexSet


class Family(str, Enum):
    H = "H"
    HPRIME = "HPRIME"
    K_MINUS_CLIQUE = "K_MINUS_CLIQUE"


@dataclass(frozen=True)
class LabeledConstruction:
    graph: Graph
    family: Family
    d: Optional[int]
    parts: dict[str, VertexSet] = field(default_factory=dict)
    cut_vertex: Optional[int] = None


def _check_params(n: int, d: int) -> None:
    if n < 3 or d < 1 or d > max_d(n):
        raise ParameterOutOfRange(
            f"construction needs 1 <= d <= floor((n-1)/2), got n={n}, d={d}"
        )


def _clique_rows(rows: list[int], members: VertexSet) -> None:
    for v in members:
        rows[v] |= members.bits & ~(1 << v)


def embed_H(n: int, D: VertexSet, S: VertexSet) -> Graph:
    """H_{n,|D|} with independent part D joined completely to S."""
    if len(D) != len(S) or not D.isdisjoint(S):
        raise GraphError("H embedding needs disjoint D and S of equal size")
    full = VertexSet((1 << n) - 1)
    if not (D | S).issubset(full):
        raise GraphError(f"H embedding parts exceed 0..{n - 1}")
    rows = [0] * n
    _clique_rows(rows, full - D)
    for u in D:
        rows[u] |= S.bits
        for w in S:
            rows[w] |= 1 << u
    return Graph(n, rows)


def embed_Hprime(n: int, B: VertexSet, c: int) -> Graph:
    """H'_{n,|B|-1}: cliques on B and on the complement of B plus c."""
    if c not in B:
        raise GraphError(f"cut vertex {c} is not in B")
    full = VertexSet((1 << n) - 1)
    if not B.issubset(full):
        raise GraphError(f"H' embedding part exceeds 0..{n - 1}")
    rows = [0] * n
    _clique_rows(rows, B)
    _clique_rows(rows, (full - B) | VertexSet(1 << c))
    return Graph(n, rows)


def build_H(n: int, d: int) -> LabeledConstruction:
    _check_params(n, d)
    A = VertexSet((1 << (n - d)) - 1)
    S = VertexSet((1 << d) - 1)
    D = VertexSet(((1 << n) - 1) & ~A.bits)
    return LabeledConstruction(
        graph=embed_H(n, D, S),
        family=Family.H,
        d=d,
        parts={"A": A, "S": S, "D": D},
    )


def build_Hprime(n: int, d: int) -> LabeledConstruction:
    """
    A = {0..n-d-1}, B = {n-d-1..n-1}; the cut vertex is n-d-1, the last
    vertex of A.
    """
    _check_params(n, d)
    c = n - d - 1
    A = VertexSet((1 << (n - d)) - 1)
    B = VertexSet(((1 << n) - 1) & ~((1 << c) - 1))
    return LabeledConstruction(
        graph=embed_Hprime(n, B, c),
        family=Family.HPRIME,
        d=d,
        parts={"A": A, "B": B},
        cut_vertex=c,
    )


def build_K_minus_clique(n: int) -> LabeledConstruction:
    """K_n with every edge inside R = {n-r..n-1}, r = ceil((n+1)/2), removed."""
    if n < 3:
        raise ParameterOutOfRange(f"K_n - E(K_r) needs n >= 3, got {n}")
    r = (n + 2) // 2
    full = (1 << n) - 1
    R = VertexSet(full & ~((1 << (n - r)) - 1))
    rows = [full & ~(1 << v) for v in range(n)]
    for v in R:
        rows[v] &= ~R.bits
    return LabeledConstruction(
        graph=Graph(n, rows),
        family=Family.K_MINUS_CLIQUE,
        d=None,
        parts={"R": R},
    )


def build(family: Family, n: int, d: Optional[int] = None) -> LabeledConstruction:
    if family == Family.K_MINUS_CLIQUE:
        return build_K_minus_clique(n)
    if d is None:
        raise ParameterOutOfRange(f"family {family.value} needs a d parameter")
    if family == Family.H:
        return build_H(n, d)
    return build_Hprime(n, d)
