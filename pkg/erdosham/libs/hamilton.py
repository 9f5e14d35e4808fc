"""
Exact hamiltonicity: cycles, cycles through a linear forest, and s-t paths.

reach[mask] holds the vertices at which a path from the start that visits
exactly `mask` can end. Forest paths are contracted to forced edges between
their ends, recorded as `partner[v]`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from erdosham.libs.common import (
    ForestError,
    ParameterOutOfRange,
    check_cancel,
    ham_info,
)
from erdosham.libs.graph import Graph, VertexSet

DP_MAX_VERTICES = 24
VECTOR_MIN_VERTICES = 13
HAMILTONIAN = "hamiltonian"

_NO_PARTNER = -1
_CANCEL_EVERY = 4096


@dataclass(frozen=True)
class LinearForest:
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> "LinearForest":
        normal = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(tuple(normal))

    @property
    def size(self) -> int:
        return len(self.edges)

    def validate(self, n: int) -> None:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        degree = [0] * n
        for u, v in self.edges:
            if u == v or u < 0 or v >= n:
                raise ForestError(f"forest edge {u}{v} is not a pair of 0..{n - 1}")
            degree[u] += 1
            degree[v] += 1
            if degree[u] > 2 or degree[v] > 2:
                raise ForestError(f"forest has a vertex of degree 3 at edge {u}{v}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ForestError(f"forest edge {u}{v} closes a cycle")
            parent[ru] = rv

    def paths(self, n: int) -> list[list[int]]:
        """The forest's non-trivial paths, each listed from its smaller end."""
        adj: dict[int, list[int]] = {}
        for u, v in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen: set[int] = set()
        result = []
        for v in sorted(adj):
            if v in seen or len(adj[v]) != 1:
                continue
            path = [v]
            seen.add(v)
            prev, cur = None, v
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                path.append(cur)
                seen.add(cur)
            result.append(path)
        return result


@dataclass(frozen=True)
class CycleWitness:
    order: tuple[int, ...]

    def edges(self) -> set[tuple[int, int]]:
        n = len(self.order)
        return {
            (min(self.order[i], self.order[(i + 1) % n]),
             max(self.order[i], self.order[(i + 1) % n]))
            for i in range(n)
        }


def validate_cycle(
    g: Graph, order: Sequence[int], required: Iterable[tuple[int, int]] = ()
) -> bool:
    n = g.n
    if n < 3 or sorted(order) != list(range(n)):
        return False
    for i in range(n):
        if not g.has_edge(order[i], order[(i + 1) % n]):
            return False
    used = CycleWitness(tuple(order)).edges()
    return all((min(u, v), max(u, v)) in used for u, v in required)


def validate_path(g: Graph, order: Sequence[int], s: int, t: int) -> bool:
    if sorted(order) != list(range(g.n)) or order[0] != s or order[-1] != t:
        return False
    return all(g.has_edge(order[i], order[i + 1]) for i in range(len(order) - 1))


def dirac_ore_fast_check(g: Graph) -> Optional[str]:
    """Positive verdict under Dirac's or Ore's condition, otherwise None."""
    n = g.n
    if n < 3:
        return None
    degrees = g.degrees()
    if 2 * min(degrees) >= n:
        return HAMILTONIAN
    for u, v in g.non_edges():
        if degrees[u] + degrees[v] < n:
            return None
    return HAMILTONIAN


def palmer_cycle(g: Graph) -> Optional[list[int]]:
    """Close the gaps of a cyclic order by prefix reversals; None if stuck."""
    n = g.n
    if n < 3:
        return None
    rows = g.rows
    seq = list(range(n))
    for _ in range(n * n):
        gap = None
        for i in range(n):
            a, b = seq[i], seq[(i + 1) % n]
            if not (rows[a] >> b) & 1:
                gap = i
                break
        if gap is None:
            return seq
        # rotate so the gap sits between seq[-1] and seq[0]
        seq = seq[gap + 1 :] + seq[: gap + 1]
        first, last = seq[0], seq[-1]
        for j in range(1, n - 1):
            if (rows[first] >> seq[j]) & 1 and (rows[last] >> seq[j - 1]) & 1:
                seq = seq[:j][::-1] + seq[j:]
                break
        else:
            return None
    return None


def _too_many_components(g: Graph, s: VertexSet) -> bool:
    return len(g.component_masks(s.bits)) > len(s)


def scattering_obstruction(g: Graph) -> Optional[VertexSet]:
    """A set S leaving more than |S| components, if a cheap candidate finds one."""
    n = g.n
    if n < 3:
        return None
    degrees = g.degrees()
    for k in range(1, (n - 1) // 2 + 1):
        low = VertexSet.of(v for v in range(n) if degrees[v] <= k)
        if not low:
            continue
        s = g.union_neighborhood(low)
        if s and _too_many_components(g, s):
            return s
    independent = 0
    blocked = 0
    for v in sorted(range(n), key=lambda x: (degrees[x], x)):
        if not (blocked >> v) & 1:
            independent |= 1 << v
            blocked |= g.rows[v] | (1 << v)
    s = g.vertices - VertexSet(independent)
    if s and _too_many_components(g, s):
        return s
    return None


def _step_ok(rows, partner, mask, v, u):
    """May a path that has visited `mask` and ends at v continue to u?"""
    if (mask >> u) & 1:
        return False
    pv = partner[v]
    if pv != _NO_PARTNER and not (mask >> pv) & 1:
        return u == pv
    if not (rows[v] >> u) & 1:
        return False
    pu = partner[u]
    return pu == _NO_PARTNER or not (mask >> pu) & 1


def _backtrack(rows, partner, start, end, reach_of):
    n = len(rows)
    order = [end]
    mask = (1 << n) - 1
    cur = end
    while cur != start:
        prev_mask = mask & ~(1 << cur)
        cands = reach_of(prev_mask)
        chosen = None
        while cands:
            low = cands & -cands
            p = low.bit_length() - 1
            if _step_ok(rows, partner, prev_mask, p, cur):
                chosen = p
                break
            cands ^= low
        if chosen is None:
            raise AssertionError("subset DP table is inconsistent")
        order.append(chosen)
        mask = prev_mask
        cur = chosen
    order.reverse()
    return order


def _dp_scalar(rows, partner, start, end_mask, cancel):
    n = len(rows)
    full = (1 << n) - 1
    sbit = 1 << start
    forced = [v for v in range(n) if partner[v] != _NO_PARTNER]
    reach = [0] * (1 << n)
    reach[sbit] = sbit
    for mask in range(sbit, 1 << n):
        if not mask & sbit:
            continue
        R = reach[mask]
        if not R:
            continue
        if (mask & (_CANCEL_EVERY - 1)) == 0:
            check_cancel(cancel)
        pinned = 0
        for v in forced:
            if not (mask >> partner[v]) & 1:
                pinned |= 1 << v
        free = R & ~pinned
        out = full & ~mask
        while out:
            low = out & -out
            out ^= low
            u = low.bit_length() - 1
            pu = partner[u]
            if pu != _NO_PARTNER and (R >> pu) & 1 and (pinned >> pu) & 1:
                reach[mask | low] |= low
            elif free & rows[u] and (pu == _NO_PARTNER or not (mask >> pu) & 1):
                reach[mask | low] |= low
    ends = reach[full] & end_mask
    if not ends:
        return None
    end = (ends & -ends).bit_length() - 1
    return _backtrack(rows, partner, start, end, lambda m: reach[m])


def _popcount_layers(bits: int):
    size = 1 << bits
    idx = np.arange(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int8)
    for b in range(bits):
        pc += ((idx >> b) & 1).astype(np.int8)
    order = np.argsort(pc, kind="stable")
    bounds = np.concatenate(([0], np.cumsum(np.bincount(pc, minlength=bits + 1))))
    return [order[bounds[k] : bounds[k + 1]] for k in range(bits + 1)]


def _dp_vector(rows, partner, start, end_mask, cancel):
    """
    The same DP on numpy arrays. Vertices are relabelled so that the start
    is n-1; table indices are the visited sets without the start bit.
    """
    n = len(rows)
    perm = [v for v in range(n) if v != start] + [start]
    new_of = {old: new for new, old in enumerate(perm)}
    nrows = [0] * n
    npartner = [_NO_PARTNER] * n
    for old in range(n):
        row = 0
        for u in VertexSet(rows[old]):
            row |= 1 << new_of[u]
        nrows[new_of[old]] = row
        if partner[old] != _NO_PARTNER:
            npartner[new_of[old]] = new_of[partner[old]]
    nend = 0
    for u in VertexSet(end_mask):
        nend |= 1 << new_of[u]

    s = n - 1
    dtype = np.uint32 if n <= 32 else np.uint64
    reach = np.zeros(1 << s, dtype=dtype)
    reach[0] = 1 << s
    forced = [v for v in range(n) if npartner[v] != _NO_PARTNER]
    for layer in _popcount_layers(s)[:-1]:
        check_cancel(cancel)
        R = reach[layer]
        live = R != 0
        if not live.any():
            return None
        ms = layer[live]
        R = R[live]
        pinned = np.zeros(len(ms), dtype=dtype)
        for v in forced:
            p = npartner[v]
            if p != s:
                pinned |= np.where((ms >> p) & 1 == 0, dtype(1 << v), dtype(0))
        free = R & ~pinned
        for u in range(s):
            outside = (ms >> u) & 1 == 0
            cond = (free & dtype(nrows[u])) != 0
            p = npartner[u]
            if p != _NO_PARTNER:
                if p == s:
                    cond = np.zeros(len(ms), dtype=bool)
                else:
                    cond &= (ms >> p) & 1 == 0
                forced_in = ((R >> dtype(p)) & dtype(1)) != 0
                forced_in &= ((pinned >> dtype(p)) & dtype(1)) != 0
                cond |= forced_in
            cond &= outside
            targets = ms[cond] | (1 << u)
            reach[targets] |= dtype(1 << u)

    last = int(reach[(1 << s) - 1]) & nend
    if not last:
        return None
    end = (last & -last).bit_length() - 1
    full_bit = 1 << s

    def reach_of(mask):
        return int(reach[mask & ~full_bit])

    order = _backtrack(nrows, npartner, s, end, reach_of)
    return [perm[v] for v in order]


def _dfs(rows, partner, start, end_mask, cycle, cancel):
    """Backtracking search with degree and connectivity pruning."""
    n = len(rows)
    full = (1 << n) - 1
    sbit = 1 << start
    path = [start]
    counter = [0]
    # forced partner pairs count as edges
    links = [
        row | (1 << partner[v] if partner[v] != _NO_PARTNER else 0)
        for v, row in enumerate(rows)
    ]

    def alive(mask, cur):
        left = full & ~mask
        if not left:
            return True
        keep = left | (1 << cur) | (sbit if cycle else 0)
        bits = left
        while bits:
            low = bits & -bits
            bits ^= low
            v = low.bit_length() - 1
            need = 1 if (not cycle and low & end_mask) else 2
            if (links[v] & keep & ~low).bit_count() < need:
                return False
        # remaining vertices must hang together with the current end
        comp = 1 << cur
        frontier = comp
        reachable = left | (1 << cur)
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = links[low.bit_length() - 1] & reachable & ~comp
            comp |= fresh
            frontier |= fresh
        return comp & left == left

    def extend(mask, cur):
        counter[0] += 1
        if counter[0] % _CANCEL_EVERY == 0:
            check_cancel(cancel)
        if mask == full:
            return bool((1 << cur) & end_mask)
        if not alive(mask, cur):
            return False
        options = []
        for u in VertexSet(full & ~mask):
            if _step_ok(rows, partner, mask, cur, u):
                options.append(u)
        options.sort(key=lambda u: ((rows[u] & ~mask).bit_count(), u))
        for u in options:
            path.append(u)
            if extend(mask | (1 << u), u):
                return True
            path.pop()
        return False

    if extend(sbit, start):
        return path
    return None


def _search(rows, partner, start, end_mask, cycle, dp_max_vertices,
            vector_min_vertices, cancel):
    n = len(rows)
    if n > dp_max_vertices:
        ham_info(f"hamilton: depth-first search on {n} vertices")
        return _dfs(rows, partner, start, end_mask, cycle, cancel)
    if n >= vector_min_vertices:
        ham_info(f"hamilton: vectorised subset DP on {n} vertices")
        return _dp_vector(rows, partner, start, end_mask, cancel)
    return _dp_scalar(rows, partner, start, end_mask, cancel)


def _quick_reject(g: Graph) -> bool:
    if g.n < 3 or g.min_degree < 2 or not g.is_two_connected():
        return True
    return scattering_obstruction(g) is not None


def is_hamiltonian(
    g: Graph,
    dp_max_vertices: int = DP_MAX_VERTICES,
    vector_min_vertices: int = VECTOR_MIN_VERTICES,
    cancel=None,
) -> Optional[CycleWitness]:
    if _quick_reject(g):
        return None
    if dirac_ore_fast_check(g) == HAMILTONIAN:
        order = palmer_cycle(g)
        if order is not None:
            return CycleWitness(tuple(order))
    rows = list(g.rows)
    partner = [_NO_PARTNER] * g.n
    order = _search(
        rows, partner, 0, rows[0], True, dp_max_vertices, vector_min_vertices, cancel
    )
    if order is None:
        return None
    return CycleWitness(tuple(order))


def ham_cycle_through_forest(
    g: Graph,
    f: LinearForest,
    dp_max_vertices: int = DP_MAX_VERTICES,
    vector_min_vertices: int = VECTOR_MIN_VERTICES,
    cancel=None,
) -> Optional[CycleWitness]:
    n = g.n
    f.validate(n)
    for u, v in f.edges:
        if not g.has_edge(u, v):
            raise ForestError(f"forest edge {u}{v} is not an edge of the graph")
    if not f.edges:
        return is_hamiltonian(g, dp_max_vertices, vector_min_vertices, cancel)
    if _quick_reject(g):
        return None

    paths = f.paths(n)
    internal = 0
    ends = {}
    for path in paths:
        for v in path[1:-1]:
            internal |= 1 << v
        ends[path[0]] = path
        ends[path[-1]] = path[::-1]

    kept = g.vertices - VertexSet(internal)
    if len(kept) == 2:
        # a single forest path covers every vertex
        a, b = kept.to_list()
        if not g.has_edge(a, b):
            return None
        return CycleWitness(tuple(ends[a]))

    sub, labels = g.induced_subgraph(kept)
    index = {old: new for new, old in enumerate(labels)}
    partner = [_NO_PARTNER] * sub.n
    for path in paths:
        a, b = index[path[0]], index[path[-1]]
        partner[a] = b
        partner[b] = a
    rows = list(sub.rows)
    order = _search(
        rows, partner, 0, rows[0], True, dp_max_vertices, vector_min_vertices, cancel
    )
    if order is None:
        return None

    expanded = []
    i = 0
    m = len(order)
    while i < m:
        a = order[i]
        if i + 1 < m and partner[a] == order[i + 1]:
            expanded.extend(ends[labels[a]])
            i += 2
        else:
            expanded.append(labels[a])
            i += 1
    witness = CycleWitness(tuple(expanded))
    if not validate_cycle(g, witness.order, f.edges):
        raise AssertionError("forest cycle expansion produced an invalid witness")
    return witness


def ham_path_between(
    g: Graph,
    s: int,
    t: int,
    dp_max_vertices: int = DP_MAX_VERTICES,
    vector_min_vertices: int = VECTOR_MIN_VERTICES,
    cancel=None,
) -> Optional[tuple[int, ...]]:
    if s == t:
        raise ParameterOutOfRange(f"path endpoints must differ, got s = t = {s}")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ParameterOutOfRange(f"path endpoints {s}, {t} outside 0..{g.n - 1}")
    if not g.is_connected():
        return None
    rows = list(g.rows)
    partner = [_NO_PARTNER] * g.n
    order = _search(
        rows, partner, s, 1 << t, False, dp_max_vertices, vector_min_vertices, cancel
    )
    return tuple(order) if order is not None else None


def brute_force_hamiltonian(g: Graph) -> Optional[tuple[int, ...]]:
    """Naive permutation oracle; only for tests and the solver harness."""
    n = g.n
    if n < 3:
        return None
    for rest in itertools.permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        order = (0,) + rest
        if validate_cycle(g, order):
            return order
    return None


def brute_force_cycle_through_forest(
    g: Graph, f: LinearForest
) -> Optional[tuple[int, ...]]:
    n = g.n
    if n < 3:
        return None
    for rest in itertools.permutations(range(1, n)):
        order = (0,) + rest
        if validate_cycle(g, order, f.edges):
            return order
    return None
