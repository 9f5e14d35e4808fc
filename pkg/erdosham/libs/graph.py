"""Immutable simple graphs on at most 64 vertices, rows as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from erdosham.libs.common import Graph6Error, GraphError

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


class VertexSet:
    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise GraphError("vertex set bitmask must be non-negative")
        self._bits = bits

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            if v < 0 or v >= MAX_VERTICES:
                raise GraphError(f"vertex {v} out of range")
            bits |= 1 << v
        return cls(bits)

    @property
    def bits(self) -> int:
        return self._bits

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self._bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __bool__(self) -> bool:
        return self._bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._bits | other._bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._bits & other._bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._bits & ~other._bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexSet) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self._bits & other._bits == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self._bits & ~other._bits == 0

    def first(self) -> int:
        if not self._bits:
            raise GraphError("empty vertex set has no first member")
        return (self._bits & -self._bits).bit_length() - 1

    def to_list(self) -> list[int]:
        return list(self)


def _full_mask(n: int) -> int:
    return (1 << n) - 1


class Graph:
    __slots__ = ("_n", "_rows", "_edges")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = _full_mask(n)
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has neighbours outside 0..{n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"vertex {v} is adjacent to itself")
            bits = row
            while bits:
                low = bits & -bits
                u = low.bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"adjacency of {v} and {u} is not symmetric")
                bits ^= low
        self._n = n
        self._rows = tuple(rows)
        self._edges = sum(row.bit_count() for row in self._rows) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return self._edges

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(_full_mask(self._n))

    def _check_vertex(self, v: int) -> None:
        if v < 0 or v >= self._n:
            raise GraphError(f"vertex {v} out of range 0..{self._n - 1}")

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self._rows[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    @property
    def min_degree(self) -> int:
        return min(row.bit_count() for row in self._rows)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self._rows[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self._rows):
            bits = row >> (u + 1)
            v = u + 1
            while bits:
                if bits & 1:
                    yield (u, v)
                bits >>= 1
                v += 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = _full_mask(self._n)
        for u, row in enumerate(self._rows):
            bits = (~row & full) >> (u + 1)
            v = u + 1
            while bits:
                if bits & 1:
                    yield (u, v)
                bits >>= 1
                v += 1

    def with_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"cannot add loop at vertex {u}")
        if (self._rows[u] >> v) & 1:
            return self
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not (self._rows[u] >> v) & 1:
            return self
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def complement(self) -> "Graph":
        full = _full_mask(self._n)
        return Graph(
            self._n, [~row & full & ~(1 << v) for v, row in enumerate(self._rows)]
        )

    def union_neighborhood(self, s: VertexSet) -> VertexSet:
        """All neighbours of members of s that are not in s themselves."""
        bits = 0
        for v in s:
            self._check_vertex(v)
            bits |= self._rows[v]
        return VertexSet(bits & ~s.bits)

    def is_clique(self, s: VertexSet) -> bool:
        for v in s:
            self._check_vertex(v)
            if (s.bits & ~(1 << v)) & ~self._rows[v]:
                return False
        return True

    def is_independent(self, s: VertexSet) -> bool:
        for v in s:
            self._check_vertex(v)
            if self._rows[v] & s.bits:
                return False
        return True

    def component_masks(self, removed: int = 0) -> list[int]:
        """Vertex masks of the connected components of G minus `removed`."""
        left = _full_mask(self._n) & ~removed
        components = []
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                fresh = self._rows[low.bit_length() - 1] & left & ~comp
                comp |= fresh
                frontier |= fresh
            components.append(comp)
            left &= ~comp
        return components

    def components(self) -> list[VertexSet]:
        return [VertexSet(mask) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) == 1

    def is_two_connected(self) -> bool:
        if self._n < 3 or not self.is_connected():
            return False
        for v in range(self._n):
            if len(self.component_masks(1 << v)) != 1:
                return False
        return True

    def induced_subgraph(self, s: VertexSet) -> tuple["Graph", list[int]]:
        """G[s] relabelled to 0..|s|-1, with the list mapping new to old labels."""
        members = s.to_list()
        index = {v: i for i, v in enumerate(members)}
        rows = []
        for v in members:
            self._check_vertex(v)
            row = 0
            for u in VertexSet(self._rows[v] & s.bits):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(members), rows), members

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The graph in which old vertex v is called perm[v]."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling is not a permutation of the vertices")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            mapped = 0
            for u in VertexSet(row):
                mapped |= 1 << perm[u]
            rows[perm[v]] = mapped
        return Graph(self._n, rows)

    def is_subgraph_of(self, other: "Graph") -> bool:
        if self._n != other._n:
            return False
        return all(row & ~o == 0 for row, o in zip(self._rows, other._rows))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._edges}, g6={encode_graph6(self)!r})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u < 0 or u >= n or v < 0 or v >= n:
            raise GraphError(f"edge {u}{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete_graph(n: int) -> Graph:
    full = _full_mask(n)
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])


def encode_graph6(g: Graph) -> str:
    # upper triangle column by column, six bits per byte, offset 63
    n = g.n
    out = bytearray(_graph6_size(n))
    chunk = 0
    filled = 0
    rows = g.rows
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            chunk = (chunk << 1) | ((row >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(63 + chunk)
                chunk = 0
                filled = 0
    if filled:
        out.append(63 + (chunk << (6 - filled)))
    return out.decode("ascii")


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error("graph6 data is not ASCII")
    if data.startswith(GRAPH6_HEADER.encode("ascii")):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise Graph6Error("empty graph6 string")
    for byte in data:
        if byte < 63 or byte > 126:
            raise Graph6Error(f"byte {byte} outside the graph6 range 63..126")

    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("malformed graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise Graph6Error(f"extended size header used for n={n}")
        body = data[4:]
    if n < 1 or n > MAX_VERTICES:
        raise Graph6Error(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}"
        )

    rows = [0] * n
    k = 0
    j, i = 1, 0
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if k < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    j += 1
                    i = 0
            elif bit:
                raise Graph6Error("graph6 padding bits must be zero")
            k += 1
    return Graph(n, rows)
