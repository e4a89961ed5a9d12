"""Exact distance-based invariants: Wiener, Szeged, revised Szeged, gap.

Everything is integer arithmetic; the revised Szeged index is carried as an
integer scaled by 4 (its denominator always divides 4) and exposed as a
Fraction.  Two independent computation routes exist on purpose: the Szeged
index sums per-edge partition products, while the pair-contribution table
sums the 0/1 contribution of every vertex pair over every edge; their
agreement is a structural identity worth checking on every graph.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DisconnectedGraphError, GraphConstructionError
from .graphs import DistanceMatrix, Graph, all_pairs_distances, is_bipartite


def _require_connected(dist: DistanceMatrix) -> None:
    if not dist.all_reachable:
        raise DisconnectedGraphError("invariant requires a connected graph")


def wiener(dist: DistanceMatrix) -> int:
    """Sum of distances over unordered vertex pairs."""
    _require_connected(dist)
    return sum(sum(row) for row in dist.rows) // 2


@dataclass(frozen=True)
class EdgePartition:
    """Counts of vertices strictly closer to u, strictly closer to v, equidistant."""

    u: int
    v: int
    n_u: int
    n_v: int
    n_0: int


def edge_partition(g: Graph, dist: DistanceMatrix, e: tuple[int, int]) -> EdgePartition:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphConstructionError(f"({u}, {v}) is not an edge")
    du, dv = dist.rows[u], dist.rows[v]
    n_u = n_v = n_0 = 0
    for w in g.vertices():
        if du[w] < dv[w]:
            n_u += 1
        elif dv[w] < du[w]:
            n_v += 1
        else:
            n_0 += 1
    return EdgePartition(u, v, n_u, n_v, n_0)


def edge_partitions(g: Graph, dist: DistanceMatrix | None = None) -> tuple[EdgePartition, ...]:
    if dist is None:
        dist = all_pairs_distances(g)
    return tuple(edge_partition(g, dist, e) for e in g.edges)


def szeged(g: Graph) -> int:
    """Sum over edges of n_u * n_v."""
    dist = all_pairs_distances(g)
    _require_connected(dist)
    return sum(p.n_u * p.n_v for p in edge_partitions(g, dist))


def revised_szeged_times4(g: Graph) -> int:
    """4 * Sz*, exact: sum over edges of (2 n_u + n_0)(2 n_v + n_0)."""
    dist = all_pairs_distances(g)
    _require_connected(dist)
    return sum((2 * p.n_u + p.n_0) * (2 * p.n_v + p.n_0) for p in edge_partitions(g, dist))


def revised_szeged(g: Graph) -> Fraction:
    """Szeged variant crediting half the equidistant count to each side."""
    return Fraction(revised_szeged_times4(g), 4)


def mu(g: Graph, dist: DistanceMatrix, x: int, y: int, e: tuple[int, int]) -> int:
    """1 when x and y fall strictly on opposite sides of edge e, else 0."""
    if x == y:
        raise GraphConstructionError("pair vertices must be distinct")
    u, v = e
    if not g.has_edge(u, v):
        raise GraphConstructionError(f"({u}, {v}) is not an edge")
    dx, dy = dist.rows[x], dist.rows[y]
    if dx[u] < dx[v] and dy[v] < dy[u]:
        return 1
    if dx[v] < dx[u] and dy[u] < dy[v]:
        return 1
    return 0


class MuTable:
    """Per-(pair, edge) 0/1 contributions with cached per-pair sums.

    The grand total over all pairs and edges reproduces the Szeged index.
    """

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...], ones: frozenset):
        self.n = n
        self.edges = edges
        self._ones = ones
        sums: dict[tuple[int, int], int] = {}
        for x in range(n):
            for y in range(x + 1, n):
                sums[(x, y)] = 0
        for pair, _e in ones:
            sums[pair] += 1
        self.pair_sums = sums
        self.total = len(ones)

    def value(self, x: int, y: int, e: tuple[int, int]) -> int:
        pair = (x, y) if x < y else (y, x)
        u, v = e
        key = (u, v) if u < v else (v, u)
        return 1 if (pair, key) in self._ones else 0

    def pair_sum(self, x: int, y: int) -> int:
        return self.pair_sums[(x, y) if x < y else (y, x)]


def mu_table(g: Graph, dist: DistanceMatrix | None = None) -> MuTable:
    if dist is None:
        dist = all_pairs_distances(g)
    _require_connected(dist)
    ones = set()
    for x in range(g.n):
        dx = dist.rows[x]
        for y in range(x + 1, g.n):
            dy = dist.rows[y]
            for u, v in g.edges:
                if (dx[u] < dx[v] and dy[v] < dy[u]) or (dx[v] < dx[u] and dy[u] < dy[v]):
                    ones.add(((x, y), (u, v)))
    return MuTable(g.n, g.edges, frozenset(ones))


def gap(g: Graph) -> int:
    """Szeged index minus Wiener index."""
    dist = all_pairs_distances(g)
    _require_connected(dist)
    return sum(p.n_u * p.n_v for p in edge_partitions(g, dist)) - wiener(dist)


@dataclass(frozen=True)
class InvariantReport:
    """One graph's invariants plus its per-edge partition table."""

    n: int
    m: int
    wiener: int
    szeged: int
    revised_szeged_times4: int
    gap: int
    per_edge: tuple[EdgePartition, ...]

    @property
    def revised_szeged(self) -> Fraction:
        return Fraction(self.revised_szeged_times4, 4)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "m": self.m,
            "wiener": self.wiener,
            "szeged": self.szeged,
            "revised_szeged_times4": self.revised_szeged_times4,
            "gap": self.gap,
            "per_edge": [
                {"u": p.u, "v": p.v, "n_u": p.n_u, "n_v": p.n_v, "n_0": p.n_0}
                for p in self.per_edge
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v", "n_u", "n_v", "n_0"])
        for p in self.per_edge:
            writer.writerow([p.u, p.v, p.n_u, p.n_v, p.n_0])
        return buf.getvalue()


def compute_invariants(g: Graph) -> InvariantReport:
    dist = all_pairs_distances(g)
    _require_connected(dist)
    parts = edge_partitions(g, dist)
    w = wiener(dist)
    sz = sum(p.n_u * p.n_v for p in parts)
    sz4 = sum((2 * p.n_u + p.n_0) * (2 * p.n_v + p.n_0) for p in parts)
    if is_bipartite(g):
        assert all(p.n_0 == 0 for p in parts)
        assert sz4 == 4 * sz
    return InvariantReport(g.n, g.m, w, sz, sz4, sz - w, parts)
