"""
Closed-form edge bounds for nonhamiltonian graphs.

Everything here is exact integer arithmetic: the interesting facts are
equalities such as e(n, d0) == e(n, d0 + 1).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from erdosham.libs.common import ParameterOutOfRange


def max_d(n: int) -> int:
    """Largest admissible minimum-degree parameter, floor((n-1)/2)."""
    return (n - 1) // 2


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def h(n: int, d: int) -> int:
    if d < 0 or d > n:
        raise ParameterOutOfRange(f"h(n, d) needs 0 <= d <= n, got n={n}, d={d}")
    return comb(n - d, 2) + d * d


def _check_d(n: int, d: int) -> None:
    if n < 3 or d < 1 or d > max_d(n):
        raise ParameterOutOfRange(
            f"d={d} outside 1..floor((n-1)/2)={max_d(n)} for n={n}"
        )


def e_bound(n: int, d: int) -> int:
    """Maximum edge count of a nonhamiltonian n-vertex graph with min degree >= d."""
    _check_d(n, d)
    return max(h(n, d), h(n, max_d(n)))


def d0(n: int) -> int:
    if n < 3:
        raise ParameterOutOfRange(f"d0(n) needs n >= 3, got {n}")
    if n % 2:
        return _ceil_div(n + 1, 6)
    return _ceil_div(n + 4, 6)


def hprime_edges(n: int, d: int) -> int:
    _check_d(n, d)
    return comb(n - d, 2) + comb(d + 1, 2)


def ore_bound(n: int) -> int:
    return comb(n - 1, 2) + 1


def stability_threshold(n: int, d: int) -> int:
    """
    Right-hand side of the stability condition e(G) > e(n, d+1).

    Defined for d = floor((n-1)/2) as well, where it is never exceeded by a
    nonhamiltonian graph.
    """
    _check_d(n, d)
    return max(h(n, d + 1), h(n, max_d(n)))


def gap(n: int, d: int) -> int:
    """e(n, d) - e(n, d+1); equals n - 3d - 2 while d < d0(n) - 1."""
    _check_d(n, d)
    if d + 1 > max_d(n):
        raise ParameterOutOfRange(f"gap needs d + 1 <= {max_d(n)}, got d={d}")
    return e_bound(n, d) - e_bound(n, d + 1)


def h_dominates(n: int, d: int) -> bool:
    """True when h(n, d) > h(n, floor((n-1)/2)), by the parity criterion."""
    if n % 2:
        return 6 * d < n + 1
    return 6 * d < n + 4


def hprime_qualifying_range(n: int) -> list[int]:
    """All d < d0(n) for which H'_{n,d} beats the stability threshold."""
    return [
        d
        for d in range(1, min(d0(n), max_d(n) + 1))
        if d + 1 <= max_d(n) and hprime_edges(n, d) > e_bound(n, d + 1)
    ]


@dataclass(frozen=True)
class BoundRow:
    d: int
    h: int
    e: int
    hprime: int
    qualifies: bool


@dataclass(frozen=True)
class BoundTable:
    n: int
    d0: int
    rows: list[BoundRow] = field(default_factory=list)

    def e_column(self) -> list[int]:
        return [row.e for row in self.rows]

    def to_dict(self) -> dict:
        return asdict(self)


def bound_table(n: int) -> BoundTable:
    if n < 3:
        raise ParameterOutOfRange(f"bound table needs n >= 3, got {n}")
    top = max_d(n)
    rows = []
    for d in range(1, top + 1):
        qualifies = d + 1 <= top and hprime_edges(n, d) > e_bound(n, d + 1)
        rows.append(
            BoundRow(
                d=d,
                h=h(n, d),
                e=e_bound(n, d),
                hprime=hprime_edges(n, d),
                qualifies=qualifies,
            )
        )
    return BoundTable(n=n, d0=d0(n), rows=rows)
