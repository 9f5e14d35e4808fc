"""Stability certificates: checkable embeddings into H_{n,d} or H'_{n,d}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from erdosham.libs.common import (
    GraphError,
    HamiltonianInput,
    LemmaViolation,
    MinDegreeBelowD,
    NotEnoughEdges,
    NotSaturated,
    ParameterOutOfRange,
    SizeCapExceeded,
    ham_info,
)
from erdosham.libs.constructions import Family, embed_H, embed_Hprime
from erdosham.libs.formulas import d0, h, max_d, stability_threshold
from erdosham.libs.graph import Graph, VertexSet, decode_graph6, encode_graph6
from erdosham.libs.hamilton import (
    CycleWitness,
    LinearForest,
    ham_cycle_through_forest,
    ham_path_between,
    is_hamiltonian,
    validate_cycle,
)
from erdosham.libs.posa import posa_witness_max
from erdosham.libs.saturation import check_ore_property, is_saturated, saturate

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True)
class StabilityCertificate:
    variant: Family
    d: int
    D: VertexSet
    S: Optional[VertexSet] = None
    B: Optional[VertexSet] = None
    c: Optional[int] = None
    saturated_graph: Optional[Graph] = None
    coincident: bool = False
    d_below_d0: Optional[bool] = None
    two_connected: Optional[bool] = None

    def to_dict(self) -> dict:
        data = {"variant": self.variant.value, "d": self.d, "D": self.D.to_list()}
        if self.variant == Family.H:
            data["S"] = self.S.to_list()
        else:
            data["B"] = self.B.to_list()
            data["c"] = self.c
        data["saturated_graph6"] = (
            encode_graph6(self.saturated_graph) if self.saturated_graph else None
        )
        data["coincident"] = self.coincident
        data["d_below_d0"] = self.d_below_d0
        data["two_connected"] = self.two_connected
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "StabilityCertificate":
        variant = Family(data["variant"])
        saturated = data.get("saturated_graph6")
        return cls(
            variant=variant,
            d=data["d"],
            D=VertexSet.of(data.get("D", [])),
            S=VertexSet.of(data["S"]) if variant == Family.H else None,
            B=VertexSet.of(data["B"]) if variant == Family.HPRIME else None,
            c=data.get("c"),
            saturated_graph=decode_graph6(saturated) if saturated else None,
            coincident=data.get("coincident", False),
            d_below_d0=data.get("d_below_d0"),
            two_connected=data.get("two_connected"),
        )


def _violation(message: str, g: Graph, cycle=None) -> LemmaViolation:
    return LemmaViolation(message, graph6=encode_graph6(g), cycle=cycle)


def extract_split(
    g_sat: Graph, check_saturated: bool = True, solver: Optional[dict] = None
) -> tuple[int, VertexSet]:
    """
    The maximal Pósa witness (k, D) of a saturated graph with more than
    h(n, floor((n-1)/2)) edges; D has exactly k vertices and V - D is a clique.
    """
    n = g_sat.n
    if n < 3:
        raise ParameterOutOfRange(f"split needs n >= 3, got {n}")
    floor_bound = h(n, max_d(n))
    if g_sat.edge_count <= floor_bound:
        raise NotEnoughEdges(
            f"e(G)={g_sat.edge_count} is not above h(n, floor((n-1)/2))={floor_bound}"
        )
    if check_saturated and not is_saturated(g_sat, **(solver or {})):
        raise NotSaturated(f"{encode_graph6(g_sat)} is not saturated")

    witness = posa_witness_max(g_sat)
    if witness is None:
        raise _violation("saturated graph has no Pósa witness", g_sat)
    if len(witness.D) != witness.k:
        raise _violation(
            f"maximal witness has |D|={len(witness.D)} != k={witness.k}", g_sat
        )
    if not g_sat.is_clique(g_sat.vertices - witness.D):
        raise _violation("G - D is not complete", g_sat)
    return witness.k, witness.D


def contradiction_cycle(
    g: Graph, D: VertexSet, W: VertexSet, solver: Optional[dict] = None
) -> Optional[CycleWitness]:
    """
    A cycle of G[D + W] through w1w2 spliced with a hamiltonian w1,w2-path of
    the clique G - (D + W - {w1, w2}).
    """
    solver = solver or {}
    rest = g.vertices - D
    if len(W) < 2 or not W.issubset(rest) or not g.is_clique(rest):
        raise ParameterOutOfRange(
            "contradiction cycle needs |W| >= 2, W outside D and G - D complete"
        )
    w1, w2 = W.to_list()[:2]
    core, labels = g.induced_subgraph(D | W)
    index = {old: new for new, old in enumerate(labels)}
    through = ham_cycle_through_forest(
        core, LinearForest.of([(index[w1], index[w2])]), **solver
    )
    if through is None:
        return None
    order = [labels[v] for v in through.order]

    # walk the core cycle from w1 away from w2, ending at w2
    i = order.index(w1)
    m = len(order)
    if order[(i + 1) % m] == w2:
        walk = [order[(i - j) % m] for j in range(m)]
    else:
        walk = [order[(i + j) % m] for j in range(m)]

    outer = (g.vertices - (D | W)) | VertexSet.of([w1, w2])
    clique, outer_labels = g.induced_subgraph(outer)
    outer_index = {old: new for new, old in enumerate(outer_labels)}
    path = ham_path_between(clique, outer_index[w2], outer_index[w1], **solver)
    if path is None:
        return None
    inner = [outer_labels[v] for v in path[1:-1]]
    witness = CycleWitness(tuple(walk + inner))
    if not validate_cycle(g, witness.order):
        raise AssertionError("assembled contradiction cycle is not a cycle")
    return witness


def classify_saturated(
    g_sat: Graph,
    d: int,
    split: Optional[tuple[int, VertexSet]] = None,
    solver: Optional[dict] = None,
) -> StabilityCertificate:
    n = g_sat.n
    if split is None:
        split = extract_split(g_sat, check_saturated=False, solver=solver)
    k, D = split
    if k != d or g_sat.min_degree != d:
        raise ParameterOutOfRange(
            f"classification needs k = min degree = d, got k={k}, "
            f"min degree={g_sat.min_degree}, d={d}"
        )

    W = g_sat.union_neighborhood(D)
    for u in D:
        if g_sat.neighbors(u) - D != W:
            raise _violation(f"N({u}) outside D differs from W", g_sat)

    if len(W) == 1:
        c = W.first()
        B = D | W
        if g_sat != embed_Hprime(n, B, c):
            raise _violation("|W| = 1 but G is not H'_{n,d}", g_sat)
        return StabilityCertificate(
            variant=Family.HPRIME,
            d=d,
            D=D,
            B=B,
            c=c,
            saturated_graph=g_sat,
            coincident=d == 1,
        )

    if len(W) == d:
        if not g_sat.is_independent(D):
            raise _violation("|W| = d but D is not independent", g_sat)
        if g_sat != embed_H(n, D, W):
            raise _violation("|W| = d but G is not H_{n,d}", g_sat)
        return StabilityCertificate(
            variant=Family.H, d=d, D=D, S=W, saturated_graph=g_sat
        )

    cycle = contradiction_cycle(g_sat, D, W, solver) if len(W) >= 2 else None
    raise _violation(
        f"saturated graph has |W|={len(W)} strictly between 1 and d={d}",
        g_sat,
        cycle=cycle.order if cycle else None,
    )


def certify_stability(
    g: Graph, d: int, solver: Optional[dict] = None
) -> StabilityCertificate:
    n = g.n
    if n < 3 or d < 1 or d > max_d(n):
        raise ParameterOutOfRange(
            f"need n >= 3 and 1 <= d <= floor((n-1)/2), got n={n}, d={d}"
        )
    if g.min_degree < d:
        raise MinDegreeBelowD(f"min degree {g.min_degree} is below d={d}")
    threshold = stability_threshold(n, d)
    if g.edge_count <= threshold:
        raise NotEnoughEdges(f"e(G)={g.edge_count} is not above e(n,d+1)={threshold}")
    witness = is_hamiltonian(g, **(solver or {}))
    if witness is not None:
        raise HamiltonianInput(f"graph has the cycle {list(witness.order)}")

    g_sat = saturate(g, **(solver or {}))
    ham_info(f"certify: saturated {g.edge_count} -> {g_sat.edge_count} edges")
    violating = check_ore_property(g_sat)
    if violating is not None:
        raise _violation(f"saturated graph breaks d(u)+d(v) <= n-1 at {violating}", g_sat)

    k, D = extract_split(g_sat, check_saturated=False, solver=solver)
    if k != d:
        raise _violation(f"split has k={k} but the edge count forces k = d={d}", g_sat)

    cert = classify_saturated(g_sat, d, split=(k, D), solver=solver)
    two_connected = g.is_two_connected()
    cert = StabilityCertificate(
        variant=cert.variant,
        d=cert.d,
        D=cert.D,
        S=cert.S,
        B=cert.B,
        c=cert.c,
        saturated_graph=g_sat,
        coincident=cert.coincident,
        d_below_d0=d < d0(n),
        two_connected=two_connected,
    )
    if not cert.d_below_d0:
        raise _violation(f"stability condition held with d={d} >= d0(n)={d0(n)}", g)
    if not verify_certificate(g, cert):
        raise _violation("certificate does not restrict to the input graph", g)
    if two_connected and cert.variant != Family.H:
        raise _violation("2-connected input embedded only into H'_{n,d}", g)
    return cert


def _in_range(s: Optional[VertexSet], n: int) -> bool:
    return s is not None and s.bits >> n == 0


def verify_certificate(g: Graph, cert: StabilityCertificate) -> bool:
    """Re-check every certificate condition against g from scratch."""
    n = g.n
    d = cert.d
    if n < 3 or d < 1 or d > max_d(n):
        return False
    try:
        if cert.variant == Family.H:
            D, S = cert.D, cert.S
            if not (_in_range(D, n) and _in_range(S, n)):
                return False
            if len(D) != d or len(S) != d or not D.isdisjoint(S):
                return False
            if not g.is_independent(D):
                return False
            if any(not g.neighbors(u).issubset(S) for u in D):
                return False
            if not g.is_subgraph_of(embed_H(n, D, S)):
                return False
        else:
            B, c = cert.B, cert.c
            if not _in_range(B, n) or c is None or c not in B or len(B) != d + 1:
                return False
            inside = B - VertexSet.of([c])
            if any(not g.neighbors(v).issubset(B) for v in inside):
                return False
            if not g.is_subgraph_of(embed_Hprime(n, B, c)):
                return False
        if cert.saturated_graph is not None and not g.is_subgraph_of(
            cert.saturated_graph
        ):
            return False
    except GraphError:
        return False
    return True


def _check_oracle_size(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise SizeCapExceeded(
            f"brute-force oracle supports n <= {max_vertices}, got {g.n}"
        )


def oracle_subgraph_of_H(
    g: Graph, d: int, max_vertices: int = ORACLE_MAX_VERTICES
) -> Optional[tuple[VertexSet, VertexSet]]:
    """Lexicographically first independent d-set D with |N(D)| <= d, plus S."""
    _check_oracle_size(g, max_vertices)
    n = g.n
    for members in itertools.combinations(range(n), d):
        D = VertexSet.of(members)
        if not g.is_independent(D):
            continue
        N = g.union_neighborhood(D)
        if len(N) > d:
            continue
        S = N
        for v in range(n):
            if len(S) == d:
                break
            if v not in D and v not in S:
                S = S | VertexSet.of([v])
        return D, S
    return None


def oracle_subgraph_of_Hprime(
    g: Graph, d: int, max_vertices: int = ORACLE_MAX_VERTICES
) -> Optional[tuple[VertexSet, int]]:
    """Lexicographically first (B, c): |B| = d+1 and edges leaving B all touch c."""
    _check_oracle_size(g, max_vertices)
    rows = g.rows
    for members in itertools.combinations(range(g.n), d + 1):
        B = VertexSet.of(members)
        for c in members:
            if all(rows[v] & ~B.bits == 0 for v in members if v != c):
                return B, c
    return None
