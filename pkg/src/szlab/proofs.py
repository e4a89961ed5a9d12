"""Pair surpluses and the block-level decomposition of the Szeged-Wiener gap.

The surplus of a vertex pair {x, y} is the number of edges whose distance
partition separates x from y, minus d(x, y).  Surpluses are non-negative on
every connected graph (each edge of a shortest x-y path separates the pair),
and they sum to Sz - W.  For connected bipartite graphs with m >= n the gap
decomposes over the block structure:

  * pairs inside one block contribute at least 4*size - 8 when the block has
    size >= 4 and exactly 0 when it is a bridge;
  * pairs joining the designated large block to another block contribute at
    least n_1 * (n_i - 1) per block;
  * all remaining pairs contribute >= 0.

Those three groups partition the vertex pairs, so the subtotals reconcile
exactly with Sz - W, which is how the lower bound 4n - 8 is verified here.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .canon import canonical_code
from .errors import DisconnectedGraphError, HypothesisError
from .graphs import (
    BlockDecomposition,
    CycleInfo,
    Graph,
    all_pairs_distances,
    block_decomposition,
    is_bipartite,
    is_connected,
    shortest_cycle,
)
from .invariants import gap


@dataclass(frozen=True)
class SurplusMap:
    """Per-pair surpluses; their total equals Sz - W."""

    n: int
    surpluses: dict[tuple[int, int], int]
    total: int

    def surplus(self, x: int, y: int) -> int:
        return self.surpluses[(x, y) if x < y else (y, x)]

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for s in self.surpluses.values():
            hist[s] = hist.get(s, 0) + 1
        return dict(sorted(hist.items()))


def surplus_map(g: Graph) -> SurplusMap:
    dist = all_pairs_distances(g)
    if not dist.all_reachable:
        raise DisconnectedGraphError("surplus map requires a connected graph")
    edges = g.edges
    surpluses: dict[tuple[int, int], int] = {}
    for x in range(g.n):
        dx = dist.rows[x]
        for y in range(x + 1, g.n):
            dy = dist.rows[y]
            count = 0
            for u, v in edges:
                if (dx[u] < dx[v] and dy[v] < dy[u]) or (dx[v] < dx[u] and dy[u] < dy[v]):
                    count += 1
            surpluses[(x, y)] = count - dx[y]
    total = sum(surpluses.values())
    # Independent route: per-edge partition products minus the distance sum.
    assert total == gap(g)
    return SurplusMap(g.n, surpluses, total)


@dataclass(frozen=True)
class SurplusCheck:
    passed: bool
    min_surplus: int | None
    witness: tuple[int, int] | None


def check_min_pair_surplus(g: Graph) -> SurplusCheck:
    """Every pair of a 2-connected bipartite graph on n >= 4 has surplus >= 1.

    Raises HypothesisError when the input is outside that scope; a failed
    check (never expected) reports the violating pair.
    """
    if g.n < 4:
        raise HypothesisError("n >= 4 violated")
    if not is_connected(g):
        raise HypothesisError("connected violated")
    if not is_bipartite(g):
        raise HypothesisError("bipartite violated")
    if block_decomposition(g).k != 1:
        raise HypothesisError("2-connected violated")
    smap = surplus_map(g)
    worst_pair = min(smap.surpluses, key=lambda p: (smap.surpluses[p], p))
    worst = smap.surpluses[worst_pair]
    if worst >= 1:
        return SurplusCheck(True, worst, None)
    return SurplusCheck(False, worst, worst_pair)


@dataclass(frozen=True)
class AntipodalCheck:
    passed: bool
    cycle: CycleInfo
    pairs_checked: int
    failures: tuple[tuple[tuple[int, int], tuple[int, int]], ...]


def check_antipodal_cycle(g: Graph) -> AntipodalCheck:
    """On a shortest cycle, every antipodal pair is separated by every cycle edge.

    For cycle v_1..v_p (p even, bipartite) and each i, the pair
    (v_i, v_{i+p/2}) must have contribution 1 on all p cycle edges; its
    surplus is therefore at least p/2.  Only the per-edge equalities and the
    inequality (total separations >= p) are asserted, since edges outside the
    cycle may separate the pair as well.
    """
    if not is_bipartite(g):
        raise HypothesisError("bipartite violated")
    cyc = shortest_cycle(g)
    if cyc is None:
        raise HypothesisError("acyclic input: no cycle to check")
    p = cyc.length
    assert p % 2 == 0
    verts = cyc.vertices
    cycle_edges = []
    for i in range(p):
        a, b = verts[i], verts[(i + 1) % p]
        cycle_edges.append((a, b) if a < b else (b, a))
    dist = all_pairs_distances(g)
    failures = []
    half = p // 2
    for i in range(half):
        x, y = verts[i], verts[i + half]
        dx, dy = dist.rows[x], dist.rows[y]
        on_cycle = 0
        for u, v in cycle_edges:
            if (dx[u] < dx[v] and dy[v] < dy[u]) or (dx[v] < dx[u] and dy[u] < dy[v]):
                on_cycle += 1
            else:
                failures.append(((x, y) if x < y else (y, x), (u, v)))
        everywhere = 0
        for u, v in g.edges:
            if (dx[u] < dx[v] and dy[v] < dy[u]) or (dx[v] < dx[u] and dy[u] < dy[v]):
                everywhere += 1
        if on_cycle == p:
            assert everywhere >= p
            assert everywhere - dx[y] >= half
    return AntipodalCheck(not failures, cyc, half, tuple(failures))


@dataclass(frozen=True)
class GapDecomposition:
    """The gap Sz - W split over vertex-pair categories tied to blocks.

    `within_block[i]` sums surpluses of pairs whose unique common block is
    block i.  `cross_root[i]` sums surpluses of pairs with one endpoint in
    the designated block and the other homed at block i (its nearest block
    toward the designated one).  `cross_other` collects pairs sharing no
    block with neither endpoint in the designated block.
    """

    graph: Graph
    blocks: BlockDecomposition
    root_block: int
    within_block: tuple[int, ...]
    cross_root: dict[int, int]
    cross_other: int
    total: int
    surplus: SurplusMap
    pair_category: dict[tuple[int, int], tuple]
    cross_pair_floor_ok: bool
    cross_witness_ok: bool

    @property
    def bound(self) -> int:
        return 4 * self.graph.n - 8

    def to_json_dict(self) -> dict:
        sizes = self.blocks.block_sizes
        blocks = []
        for i, verts in enumerate(self.blocks.blocks):
            entry: dict = {
                "index": i,
                "size": sizes[i],
                "vertices": sorted(verts),
                "designated": i == self.root_block,
                "within_surplus": self.within_block[i],
                "within_floor": 4 * sizes[i] - 8 if sizes[i] >= 4 else 0,
            }
            entry["within_slack"] = entry["within_surplus"] - entry["within_floor"]
            if i != self.root_block:
                floor = sizes[self.root_block] * (sizes[i] - 1)
                entry["cross_surplus"] = self.cross_root.get(i, 0)
                entry["cross_floor"] = floor
                entry["cross_slack"] = entry["cross_surplus"] - floor
            blocks.append(entry)
        return {
            "schema": 1,
            "n": self.graph.n,
            "m": self.graph.m,
            "gap": self.total,
            "bound": self.bound,
            "designated_block": self.root_block,
            "blocks": blocks,
            "cross_other": self.cross_other,
            "surplus_histogram": {str(k): v for k, v in self.surplus.histogram().items()},
            "cross_pair_floor_ok": self.cross_pair_floor_ok,
            "cross_witness_ok": self.cross_witness_ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=False)

    def pairs_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "distance", "separations", "surplus", "category", "block"])
        dist = all_pairs_distances(self.graph)
        for (x, y), s in sorted(self.surplus.surpluses.items()):
            cat = self.pair_category[(x, y)]
            block = cat[1] if len(cat) > 1 else ""
            d = dist.d(x, y)
            writer.writerow([x, y, d, s + d, s, cat[0], block])
        return buf.getvalue()


def _block_cut_tree(decomp: BlockDecomposition) -> dict:
    """Adjacency of the bipartite tree on block nodes ('B', i) and cut nodes ('C', v)."""
    adj: dict[tuple, list[tuple]] = {}
    for i, verts in enumerate(decomp.blocks):
        adj.setdefault(("B", i), [])
        for v in sorted(verts):
            if v in decomp.cut_vertices:
                adj[("B", i)].append(("C", v))
                adj.setdefault(("C", v), []).append(("B", i))
    return adj


def gap_decomposition(g: Graph) -> GapDecomposition:
    """Decompose Sz - W over block categories and assert every lower bound.

    Hypotheses: connected, bipartite, m >= n.  Pairs sharing a block belong
    to that (unique) block; remaining pairs attach to the designated block's
    category when one endpoint lies in it.  Pairs whose designated-side
    endpoint is the connecting cut vertex carry surplus >= 0 and are kept in
    the designated category so the categories partition all pairs exactly.
    """
    if not is_connected(g):
        raise HypothesisError("connected violated")
    if not is_bipartite(g):
        raise HypothesisError("bipartite violated")
    if g.m < g.n:
        raise HypothesisError("m >= n violated")

    decomp = block_decomposition(g)
    sizes = decomp.block_sizes
    big = [i for i in range(decomp.k) if sizes[i] >= 4]
    # m >= n forces a cycle, and bipartite blocks with a cycle have >= 4 vertices.
    assert big, "no block of size >= 4 under m >= n and bipartite hypotheses"
    root = min(
        big,
        key=lambda i: (
            -sizes[i],
            canonical_code(_induced_block(g, decomp.blocks[i])),
            sorted(decomp.blocks[i]),
        ),
    )

    tree = _block_cut_tree(decomp)
    parent: dict[tuple, tuple | None] = {("B", root): None}
    order = [("B", root)]
    for node in order:
        for nb in tree.get(node, ()):
            if nb not in parent:
                parent[nb] = node
                order.append(nb)

    # w_i: the cut vertex of block i on the tree path toward the root block.
    toward_root_cut: dict[int, int] = {}
    # home block of a vertex: the block containing it nearest the root block.
    home: dict[int, int] = {}
    vertex_blocks: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for i, verts in enumerate(decomp.blocks):
        for v in verts:
            vertex_blocks[v].append(i)
    for i in range(decomp.k):
        if i == root:
            continue
        par = parent[("B", i)]
        assert par is not None and par[0] == "C"
        toward_root_cut[i] = par[1]
    for v in g.vertices():
        if v in decomp.blocks[root]:
            home[v] = root
        elif len(vertex_blocks[v]) == 1:
            home[v] = vertex_blocks[v][0]
        else:
            par = parent[("C", v)]
            assert par is not None and par[0] == "B"
            home[v] = par[1]

    # w_1(i): the cut vertex inside the root block on the path toward block i,
    # i.e. the last cut node before the root on i's tree path.
    root_gate: dict[int, int] = {}
    for i in range(decomp.k):
        if i == root:
            continue
        node: tuple = ("B", i)
        while parent[node] != ("B", root):
            nxt = parent[node]
            assert nxt is not None
            node = nxt
        assert node[0] == "C"
        root_gate[i] = node[1]

    smap = surplus_map(g)
    within = [0] * decomp.k
    cross_root: dict[int, int] = {i: 0 for i in range(decomp.k) if i != root}
    cross_other = 0
    category: dict[tuple[int, int], tuple] = {}
    root_set = decomp.blocks[root]
    for (x, y), s in smap.surpluses.items():
        common = set(vertex_blocks[x]) & set(vertex_blocks[y])
        if common:
            assert len(common) == 1
            b = common.pop()
            within[b] += s
            category[(x, y)] = ("within", b)
        elif x in root_set or y in root_set:
            far = y if x in root_set else x
            cross_root[home[far]] += s
            category[(x, y)] = ("cross_root", home[far])
        else:
            cross_other += s
            category[(x, y)] = ("cross_other", (home[x], home[y]))

    total = sum(within) + sum(cross_root.values()) + cross_other
    assert len(category) == g.n * (g.n - 1) // 2
    assert total == smap.total

    for i in range(decomp.k):
        if sizes[i] >= 4:
            assert within[i] >= 4 * sizes[i] - 8
        else:
            assert sizes[i] == 2 and within[i] == 0
    for i, sub in cross_root.items():
        assert sub >= sizes[root] * (sizes[i] - 1)
    assert cross_other >= 0

    floor_ok, witness_ok = _check_cross_refinement(decomp, root, root_gate, toward_root_cut, smap)
    return GapDecomposition(
        g,
        decomp,
        root,
        tuple(within),
        cross_root,
        cross_other,
        total,
        smap,
        category,
        floor_ok,
        witness_ok,
    )


def _check_cross_refinement(
    decomp: BlockDecomposition,
    root: int,
    root_gate: dict[int, int],
    toward_root_cut: dict[int, int],
    smap: SurplusMap,
) -> tuple[bool, bool]:
    # Per cross pair (gates excluded on both sides) the surplus is >= 1, and
    # each far vertex admits a designated-side partner with surplus >= 2.
    floor_ok = True
    witness_ok = True
    root_set = decomp.blocks[root]
    for i in range(decomp.k):
        if i == root:
            continue
        gate = root_gate[i]
        w_i = toward_root_cut[i]
        far_side = [y for y in decomp.blocks[i] if y != w_i]
        near_side = [x for x in root_set if x != gate]
        for y in far_side:
            if not all(smap.surplus(x, y) >= 1 for x in near_side):
                floor_ok = False
            if not any(smap.surplus(z, y) >= 2 for z in near_side):
                witness_ok = False
    return floor_ok, witness_ok


def _induced_block(g: Graph, verts: frozenset[int]) -> Graph:
    order = sorted(verts)
    index = {v: i for i, v in enumerate(order)}
    return Graph(len(order), [(index[u], index[v]) for u, v in g.edges if u in verts and v in verts])
