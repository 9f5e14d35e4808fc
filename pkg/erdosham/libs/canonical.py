"""
Canonical labeling and isomorph-free enumeration of small graphs.

The canonical form is found by backtracking over vertex orderings: an ordered
partition is refined by neighbour counts until equitable, the first
non-singleton cell is split by individualising one of its vertices, and the
leaf whose relabelled adjacency string is largest wins. Vertices that are
twins (same neighbourhood apart from each other) are interchangeable by an
automorphism, so only one of them is individualised per cell.
"""

from __future__ import annotations

from typing import Iterator, Optional

from erdosham.libs.common import SizeCapExceeded, ham_info
from erdosham.libs.graph import Graph, encode_graph6

ENUMERATION_MAX_VERTICES = 10


def _refine(rows, cells):
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _certificate(rows, order):
    """Adjacency bits of the relabelled graph in graph6 order, as one int."""
    n = len(order)
    cert = 0
    for j in range(1, n):
        row = rows[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((row >> order[i]) & 1)
    return cert


def _twins(rows, u, v):
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def canonical_labeling(g: Graph) -> list[int]:
    """perm with perm[v] = canonical label of v; g.relabel(perm) is canonical."""
    rows = g.rows
    n = g.n
    degrees = g.degrees()
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(degrees[v], []).append(v)
    root = _refine(rows, [by_degree[d] for d in sorted(by_degree)])

    best = [-1, None]

    def search(cells):
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            cert = _certificate(rows, order)
            if cert > best[0]:
                best[0] = cert
                best[1] = order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if any(_twins(rows, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(rows, split))

    search(root)
    perm = [0] * n
    for label, v in enumerate(best[1]):
        perm[v] = label
    return perm


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_key(g: Graph) -> str:
    return encode_graph6(canonical_form(g))


def are_isomorphic(g: Graph, other: Graph) -> bool:
    if g.n != other.n or g.edge_count != other.edge_count:
        return False
    if sorted(g.degrees()) != sorted(other.degrees()):
        return False
    return canonical_key(g) == canonical_key(other)


def isomorphism(g: Graph, other: Graph) -> Optional[list[int]]:
    """An explicit mapping m with g.relabel(m) == other, or None."""
    if g.n != other.n or g.edge_count != other.edge_count:
        return None
    pg = canonical_labeling(g)
    po = canonical_labeling(other)
    if g.relabel(pg) != other.relabel(po):
        return None
    inverse_po = [0] * other.n
    for v, label in enumerate(po):
        inverse_po[label] = v
    return [inverse_po[pg[v]] for v in range(g.n)]


def _edges_still_possible(m: int, n: int) -> int:
    """Edges that vertices m..n-1 can still add to a graph on m vertices."""
    return n * (n - 1) // 2 - m * (m - 1) // 2


def enumerate_graphs(
    n: int, max_edges: Optional[int] = None, min_edges: Optional[int] = None
) -> Iterator[Graph]:
    """
    One canonical representative per isomorphism class of n-vertex graphs
    with min_edges <= e <= max_edges.

    Graphs grow one vertex at a time: every canonical parent on m vertices
    gets vertex m with each possible neighbourhood, and a child survives when
    its canonical form has not been produced before. Both edge bounds are
    hereditary under vertex deletion, so pruning parents loses nothing.
    Output order is deterministic.
    """
    if n < 1 or n > ENUMERATION_MAX_VERTICES:
        raise SizeCapExceeded(
            f"enumeration supports 1 <= n <= {ENUMERATION_MAX_VERTICES}, got {n}"
        )

    def admissible(e, m):
        if max_edges is not None and e > max_edges:
            return False
        if min_edges is not None and e + _edges_still_possible(m, n) < min_edges:
            return False
        return True

    level = [Graph(1, [0])] if admissible(0, 1) else []
    for m in range(1, n):
        seen = set()
        children = []
        last = m + 1 == n
        for parent in level:
            base = list(parent.rows)
            for nbrs in range(1 << m):
                e = parent.edge_count + nbrs.bit_count()
                if not admissible(e, m + 1):
                    continue
                rows = base[:]
                for v in range(m):
                    if (nbrs >> v) & 1:
                        rows[v] |= 1 << m
                rows.append(nbrs)
                child = canonical_form(Graph(m + 1, rows))
                key = child.rows
                if key in seen:
                    continue
                seen.add(key)
                if last:
                    yield child
                else:
                    children.append(child)
        if not last:
            ham_info(f"enumerate: {len(children)} classes on {m + 1} vertices")
        level = children
    if n == 1:
        yield from level
