"""
Exhaustive and randomised verification of the hamiltonicity edge bounds.

Bound checks only look at graphs with at least as many edges as the bound
under test, found by enumerating their sparse complements. That is enough to
pin the maximum down exactly: any nonhamiltonian graph above the bound would
be among them, and the extremal graphs at the bound are too.

Reports are deterministic for fixed parameters: graphs are visited in
enumeration order, worker results are gathered in submission order, and lists
are sorted by graph6 key. Only wall_time varies between runs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import comb
from typing import Callable, Iterable, Optional

import numpy as np
from tqdm import tqdm

from erdosham.libs.canonical import canonical_key, enumerate_graphs
from erdosham.libs.certify import (
    ORACLE_MAX_VERTICES,
    certify_stability,
    oracle_subgraph_of_H,
    oracle_subgraph_of_Hprime,
    verify_certificate,
)
from erdosham.libs.common import (
    ErdosHamError,
    ParameterOutOfRange,
    SizeCapExceeded,
    check_cancel,
    ham_info,
)
from erdosham.libs.constructions import (
    Family,
    build_H,
    build_Hprime,
    build_K_minus_clique,
)
from erdosham.libs.formulas import d0, e_bound, max_d, ore_bound, stability_threshold
from erdosham.libs.graph import Graph, decode_graph6, encode_graph6, from_edge_list
from erdosham.libs.hamilton import (
    LinearForest,
    brute_force_cycle_through_forest,
    brute_force_hamiltonian,
    ham_cycle_through_forest,
    is_hamiltonian,
    validate_cycle,
)
from erdosham.libs.posa import posa2_condition_holds, posa_witness_max
from erdosham.libs.saturation import check_ore_property, is_saturated, saturate

RANDOM_ATTEMPTS = 200


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    graphs_examined: int = 0
    max_edges_found: Optional[int] = None
    extremal_graph6: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        return "success" if not self.counterexamples else "counterexample"

    def add_counterexample(self, g: Optional[Graph], reason: str) -> None:
        self.counterexamples.append(
            {"graph6": encode_graph6(g) if g is not None else None, "reason": reason}
        )

    def finish(self, started: float) -> "VerificationReport":
        self.extremal_graph6.sort()
        self.counterexamples.sort(key=lambda ce: (ce["graph6"] or "", ce["reason"]))
        self.wall_time = time.monotonic() - started
        ham_info(
            f"verify {self.theorem}: {self.graphs_examined} graphs, "
            f"{len(self.counterexamples)} counterexamples, {self.wall_time:.2f}s"
        )
        return self

    def to_dict(self, timing: bool = False) -> dict:
        data = {
            "theorem": self.theorem,
            "params": self.params,
            "status": self.status,
            "graphs_examined": self.graphs_examined,
            "max_edges_found": self.max_edges_found,
            "extremal_graph6": self.extremal_graph6,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }
        if timing:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _map(func: Callable, items: Iterable, workers: int, progress: bool):
    """Ordered map, in-process or over a process pool."""
    items = tqdm(items, disable=not progress, leave=False)
    if workers <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=64))


def _pool_solver(solver: Optional[dict], workers: int) -> dict:
    solver = dict(solver or {})
    if workers > 1:
        # cancellation events do not cross process boundaries
        solver.pop("cancel", None)
    return solver


def _dense_graphs(n: int, min_edges: Optional[int]) -> Iterable[Graph]:
    """All classes with e >= min_edges, via complements when that is sparser."""
    total = comb(n, 2)
    if min_edges is None or min_edges <= 0:
        yield from enumerate_graphs(n)
        return
    for complement in enumerate_graphs(n, max_edges=total - min_edges):
        yield complement.complement()


def _nonham_case(min_degree: int, solver: dict, g6: str) -> Optional[int]:
    g = decode_graph6(g6)
    if g.min_degree < min_degree:
        return None
    if is_hamiltonian(g, **solver) is not None:
        return None
    return g.edge_count


def _scan_nonhamiltonian(report, n, min_degree, floor_edges, workers, solver, progress):
    graphs = [encode_graph6(g) for g in _dense_graphs(n, floor_edges)]
    report.graphs_examined = len(graphs)
    check = partial(_nonham_case, min_degree, _pool_solver(solver, workers))
    edges = _map(check, graphs, workers, progress)
    found = [(e, g6) for e, g6 in zip(edges, graphs) if e is not None]
    report.details["nonhamiltonian"] = len(found)
    if not found:
        return set()
    top = max(e for e, _ in found)
    report.max_edges_found = top
    keys = {canonical_key(decode_graph6(g6)) for e, g6 in found if e == top}
    report.extremal_graph6 = sorted(keys)
    return keys


def _check_n(n: int, low: int, high: int, what: str) -> None:
    if n < low or n > high:
        raise ParameterOutOfRange(f"{what} supports {low} <= n <= {high}, got n={n}")


def _check_d(n: int, d: int, high: Optional[int] = None) -> None:
    top = max_d(n) if high is None else high
    if d < 1 or d > top:
        raise ParameterOutOfRange(f"d={d} outside 1..{top} for n={n}")


def verify_ore(
    n: int,
    exhaustive: bool = False,
    workers: int = 1,
    solver: Optional[dict] = None,
    progress: bool = False,
) -> VerificationReport:
    """Nonhamiltonian graphs have at most C(n-1,2)+1 edges, uniquely attained."""
    _check_n(n, 4, 9, "verify ore")
    started = time.monotonic()
    bound = ore_bound(n)
    report = VerificationReport("ore", {"n": n, "exhaustive": exhaustive})
    report.details["bound"] = bound
    keys = _scan_nonhamiltonian(
        report, n, 0, None if exhaustive else bound, workers, solver, progress
    )
    if report.max_edges_found != bound:
        report.add_counterexample(
            None, f"maximum is {report.max_edges_found}, expected {bound}"
        )
    expected = canonical_key(build_Hprime(n, 1).graph)
    for key in sorted(keys - {expected}):
        report.add_counterexample(decode_graph6(key), "additional extremal class")
    if keys and expected not in keys:
        report.add_counterexample(build_Hprime(n, 1).graph, "K_{n-1} plus pendant missing")
    return report.finish(started)


def verify_erdos(
    n: int,
    d: int,
    exhaustive: bool = False,
    workers: int = 1,
    solver: Optional[dict] = None,
    progress: bool = False,
) -> VerificationReport:
    """Nonhamiltonian graphs with min degree >= d have at most e(n,d) edges."""
    _check_n(n, 4, 9, "verify erdos")
    _check_d(n, d)
    started = time.monotonic()
    bound = e_bound(n, d)
    report = VerificationReport("erdos", {"n": n, "d": d, "exhaustive": exhaustive})
    report.details["bound"] = bound
    keys = _scan_nonhamiltonian(
        report, n, d, None if exhaustive else bound, workers, solver, progress
    )
    if report.max_edges_found != bound:
        report.add_counterexample(
            None, f"maximum is {report.max_edges_found}, expected {bound}"
        )
    candidates = {
        "H(n,d)": build_H(n, d).graph,
        "H(n,floor((n-1)/2))": build_H(n, max_d(n)).graph,
        "K_n-E(K_r)": build_K_minus_clique(n).graph,
    }
    attaining = []
    for name, graph in sorted(candidates.items()):
        if graph.edge_count != bound:
            continue
        attaining.append(name)
        if canonical_key(graph) not in keys:
            report.add_counterexample(graph, f"{name} attains the bound but was missed")
    report.details["attained_by"] = attaining
    if not attaining:
        report.add_counterexample(None, "no named construction attains the bound")
    return report.finish(started)


def _stability_case(d: int, oracle_max: int, solver: dict, g6: str) -> Optional[dict]:
    g = decode_graph6(g6)
    if g.min_degree < d or is_hamiltonian(g, **solver) is not None:
        return None
    outcome = {"qualifier": True, "variant": None, "problems": []}
    try:
        cert = certify_stability(g, d, solver=solver)
    except ErdosHamError as exc:
        outcome["problems"].append(f"certify_stability failed: {exc}")
        return outcome
    outcome["variant"] = cert.variant.value
    if not verify_certificate(g, cert):
        outcome["problems"].append("certificate does not re-validate")
    by_h = oracle_subgraph_of_H(g, d, oracle_max)
    by_hprime = oracle_subgraph_of_Hprime(g, d, oracle_max)
    if cert.variant == Family.H and by_h is None:
        outcome["problems"].append("H certificate but the H oracle finds nothing")
    if cert.variant == Family.HPRIME and by_hprime is None:
        outcome["problems"].append("H' certificate but the H' oracle finds nothing")
    if g.is_two_connected() and (cert.variant != Family.H or by_h is None):
        outcome["problems"].append("2-connected qualifier not embedded in H_{n,d}")
    return outcome


def verify_stability(
    n: int,
    d: int,
    workers: int = 1,
    solver: Optional[dict] = None,
    progress: bool = False,
    oracle_max_vertices: int = ORACLE_MAX_VERTICES,
) -> VerificationReport:
    """Every qualifying graph embeds into H_{n,d} or H'_{n,d}."""
    _check_n(n, 5, 10, "verify stability")
    _check_d(n, d, d0(n) - 1)
    if n > oracle_max_vertices:
        raise SizeCapExceeded(
            f"verify stability needs the oracles on {n} vertices, "
            f"[oracle] max_vertices is {oracle_max_vertices}"
        )
    started = time.monotonic()
    threshold = stability_threshold(n, d)
    report = VerificationReport("stability", {"n": n, "d": d})
    report.details["threshold"] = threshold
    graphs = [encode_graph6(g) for g in _dense_graphs(n, threshold + 1)]
    report.graphs_examined = len(graphs)
    check = partial(
        _stability_case, d, oracle_max_vertices, _pool_solver(solver, workers)
    )
    outcomes = _map(check, graphs, workers, progress)
    variants = {Family.H.value: 0, Family.HPRIME.value: 0}
    qualifiers = 0
    for g6, outcome in zip(graphs, outcomes):
        if outcome is None:
            continue
        qualifiers += 1
        if outcome["variant"]:
            variants[outcome["variant"]] += 1
        for problem in outcome["problems"]:
            report.add_counterexample(decode_graph6(g6), problem)
    report.details["qualifiers"] = qualifiers
    report.details["variants"] = variants
    return report.finish(started)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    coins = rng.random((n, n))
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v] < p]
    )


def random_linear_forest(g: Graph, size: int, rng: np.random.Generator):
    """A maximal-greedy linear forest on a shuffled edge order, cut at `size`."""
    edges = list(g.edges())
    rng.shuffle(edges)
    parent = list(range(g.n))
    degree = [0] * g.n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for u, v in edges:
        if len(chosen) == size:
            break
        if degree[u] == 2 or degree[v] == 2 or find(u) == find(v):
            continue
        parent[find(u)] = find(v)
        degree[u] += 1
        degree[v] += 1
        chosen.append((u, v))
    if len(chosen) < size:
        return None
    return LinearForest.of(chosen)


def random_posa2_instance(n: int, rng: np.random.Generator):
    """
    A graph meeting d(u)+d(v) >= n+ell on non-edges, with an ell-edge forest.

    Small ell is favoured and K_n, where the condition is vacuous, is only
    returned when no other instance turns up.
    """
    complete = None
    for _ in range(RANDOM_ATTEMPTS):
        ell = min(int(rng.geometric(0.45)), n - 1)
        g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        while True:
            degrees = g.degrees()
            short = [
                (u, v) for u, v in g.non_edges() if degrees[u] + degrees[v] < n + ell
            ]
            if not short:
                break
            u, v = short[int(rng.integers(len(short)))]
            g = g.with_edge(u, v)
        forest = random_linear_forest(g, ell, rng)
        if forest is None:
            continue
        if g.edge_count < comb(n, 2):
            return g, forest, ell
        complete = complete or (g, forest, ell)
    if complete is not None:
        return complete
    raise ErdosHamError(f"could not sample a Pósa instance on {n} vertices")


def random_nonhamiltonian(n: int, rng: np.random.Generator, solver: dict) -> Graph:
    for _ in range(RANDOM_ATTEMPTS):
        g = random_graph(n, float(rng.uniform(0.15, 0.6)), rng)
        if is_hamiltonian(g, **solver) is None:
            return g
    # dense fallback: a random spanning subgraph of an extremal graph
    d = int(rng.integers(1, max_d(n) + 1))
    host = build_H(n, d).graph
    keep = rng.random(host.edge_count) < 0.8
    return from_edge_list(n, [e for e, k in zip(host.edges(), keep) if k])


def verify_posa_theorems(
    n: int,
    trials: int,
    seed: int,
    solver: Optional[dict] = None,
    progress: bool = False,
) -> VerificationReport:
    """
    Every nonhamiltonian graph has a Pósa witness (exhaustive for n <= 8),
    and the sum condition forces a cycle through any ell-edge linear forest
    (randomised).
    """
    _check_n(n, 3, 12, "verify posa")
    solver = solver or {}
    started = time.monotonic()
    report = VerificationReport("posa", {"n": n, "trials": trials, "seed": seed})
    examined = 0
    if n <= 8:
        for g in tqdm(enumerate_graphs(n), disable=not progress, leave=False):
            examined += 1
            if is_hamiltonian(g, **solver) is not None:
                continue
            witness = posa_witness_max(g)
            if witness is None or not witness.holds_in(g):
                report.add_counterexample(g, "nonhamiltonian graph without a witness")
        report.details["witness_exhaustive"] = True
    else:
        report.details["witness_exhaustive"] = False

    rng = np.random.default_rng(seed)
    for _ in tqdm(range(trials), disable=not progress, leave=False):
        check_cancel(solver.get("cancel"))
        g, forest, ell = random_posa2_instance(n, rng)
        examined += 1
        if not posa2_condition_holds(g, ell):
            report.add_counterexample(g, "sampler produced a non-qualifying graph")
            continue
        cycle = ham_cycle_through_forest(g, forest, **solver)
        if cycle is None or not validate_cycle(g, cycle.order, forest.edges):
            report.add_counterexample(
                g, f"no hamiltonian cycle through forest {list(forest.edges)}"
            )
    report.graphs_examined = examined
    return report.finish(started)


def _check_saturation(report: VerificationReport, g: Graph, solver: dict) -> None:
    closure = saturate(g, **solver)
    if not g.is_subgraph_of(closure):
        report.add_counterexample(g, "saturation lost an edge of the input")
    if is_hamiltonian(closure, **solver) is not None:
        report.add_counterexample(g, "saturation became hamiltonian")
    if not is_saturated(closure, **solver):
        report.add_counterexample(g, "closure is not saturated")
    pair = check_ore_property(closure)
    if pair is not None:
        report.add_counterexample(closure, f"degree sum above n-1 at non-edge {pair}")


def verify_saturation(
    n: int,
    trials: int,
    seed: int,
    solver: Optional[dict] = None,
    progress: bool = False,
) -> VerificationReport:
    _check_n(n, 3, 12, "verify saturation")
    solver = solver or {}
    started = time.monotonic()
    report = VerificationReport("saturation", {"n": n, "trials": trials, "seed": seed})
    examined = 0
    if n <= 7:
        for g in tqdm(enumerate_graphs(n), disable=not progress, leave=False):
            if is_hamiltonian(g, **solver) is not None:
                continue
            examined += 1
            _check_saturation(report, g, solver)
    rng = np.random.default_rng(seed)
    for _ in tqdm(range(trials), disable=not progress, leave=False):
        g = random_nonhamiltonian(n, rng, solver)
        examined += 1
        _check_saturation(report, g, solver)
    report.graphs_examined = examined
    return report.finish(started)


def verify_solver(
    n: int,
    trials: int,
    seed: int,
    solver: Optional[dict] = None,
    progress: bool = False,
) -> VerificationReport:
    """Exact solvers against permutation oracles on every class up to n vertices."""
    _check_n(n, 3, 8, "verify solver")
    solver = solver or {}
    started = time.monotonic()
    report = VerificationReport("solver", {"n": n, "trials": trials, "seed": seed})
    examined = 0
    for m in range(1, n + 1):
        for g in tqdm(enumerate_graphs(m), disable=not progress, leave=False):
            examined += 1
            fast = is_hamiltonian(g, **solver)
            slow = brute_force_hamiltonian(g)
            if (fast is None) != (slow is None):
                report.add_counterexample(g, "cycle verdict differs from brute force")
            elif fast is not None and not validate_cycle(g, fast.order):
                report.add_counterexample(g, "cycle witness does not validate")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        g = random_graph(n, float(rng.uniform(0.3, 0.9)), rng)
        size = int(rng.integers(1, n))
        forest = random_linear_forest(g, size, rng)
        if forest is None:
            forest = random_linear_forest(g, 1, rng)
        if forest is None:
            continue
        examined += 1
        fast = ham_cycle_through_forest(g, forest, **solver)
        slow = brute_force_cycle_through_forest(g, forest)
        if (fast is None) != (slow is None):
            report.add_counterexample(
                g, f"forest verdict differs from brute force for {list(forest.edges)}"
            )
        elif fast is not None and not validate_cycle(g, fast.order, forest.edges):
            report.add_counterexample(g, "forest cycle witness does not validate")
    report.graphs_examined = examined
    return report.finish(started)
