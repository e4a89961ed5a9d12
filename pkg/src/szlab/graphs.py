"""Immutable simple undirected graphs and the structural queries built on them.

Vertices are integers 0..n-1.  Adjacency is kept both as sorted neighbor
tuples (for iteration) and as per-vertex integer bitmasks (for O(1) adjacency
tests and fast BFS); Python integers are arbitrary precision, so the bitmask
path works for every graph size this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, GraphConstructionError


class Graph:
    """Simple undirected graph, immutable after construction.

    Duplicate edges are collapsed; loops and out-of-range endpoints are
    rejected.  Equality and hashing are by labeled edge set, not by
    isomorphism class (see canon.is_isomorphic for the latter).
    """

    __slots__ = ("n", "m", "edges", "_neigh", "_mask")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphConstructionError(f"vertex count must be non-negative, got {n}")
        edge_set = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(f"vertex out of range 0..{n - 1}: ({u}, {v})")
            if u == v:
                raise GraphConstructionError(f"loop edge at vertex {u}")
            edge_set.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(edge_set))
        self.m = len(self.edges)
        mask = [0] * n
        neigh = [[] for _ in range(n)]
        for u, v in self.edges:
            mask[u] |= 1 << v
            mask[v] |= 1 << u
            neigh[u].append(v)
            neigh[v].append(u)
        self._mask = tuple(mask)
        self._neigh = tuple(tuple(sorted(a)) for a in neigh)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neigh[v]

    def neighbor_mask(self, v: int) -> int:
        return self._mask[v]

    def degree(self, v: int) -> int:
        return len(self._neigh[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((len(a) for a in self._neigh), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._mask[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an iterable of vertex pairs (duplicates collapsed)."""
    return Graph(n, pairs)


def cycle_graph(p: int) -> Graph:
    return Graph(p, [(i, (i + 1) % p) for i in range(p)])


def path_graph(p: int) -> Graph:
    return Graph(p, [(i, i + 1) for i in range(p - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A on vertices 0..a-1."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs unweighted hop counts; -1 marks an unreachable pair."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] >= 0

    @property
    def all_reachable(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex, frontier-at-a-time over adjacency bitmasks."""
    masks = g._mask
    rows = []
    for s in g.vertices():
        dist = [-1] * g.n
        dist[s] = 0
        seen = 1 << s
        frontier = 1 << s
        step = 0
        while frontier:
            step += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            nxt &= ~seen
            for v in _bits(nxt):
                dist[v] = step
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g._mask[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class Bipartition:
    """Witness 2-coloring: every edge has one endpoint per side."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class OddCycleWitness:
    """Refusal witness for bipartition: an odd closed cycle."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def bipartition(g: Graph) -> Bipartition | OddCycleWitness:
    """2-color each component (smallest vertex on side A), or return an odd cycle.

    Works on disconnected graphs; absence of a bipartition is a normal result,
    not an error.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in g.vertices():
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt_queue = []
            for v in queue:
                for w in g.neighbors(v):
                    if color[w] == -1:
                        color[w] = color[v] ^ 1
                        parent[w] = v
                        nxt_queue.append(w)
                    elif color[w] == color[v]:
                        return OddCycleWitness(_close_odd_cycle(parent, v, w))
            queue = nxt_queue
    side_a = frozenset(v for v in g.vertices() if color[v] == 0)
    side_b = frozenset(v for v in g.vertices() if color[v] == 1)
    return Bipartition(side_a, side_b)


def _close_odd_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    # Walk both BFS ancestries to the lowest common ancestor; the two branch
    # paths plus edge vw close an odd cycle.
    path_v, path_w = [v], [w]
    anc_v = {v}
    x = v
    while parent[x] != -1:
        x = parent[x]
        path_v.append(x)
        anc_v.add(x)
    x = w
    while x not in anc_v:
        x = parent[x]
        path_w.append(x)
    lca = path_w[-1]
    cycle = path_v[: path_v.index(lca)] + [lca] + list(reversed(path_w[:-1]))
    return tuple(cycle)


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    Blocks are ordered by their sorted vertex tuples so reports are
    deterministic.  Every edge belongs to exactly one block, and for a
    connected graph the block sizes satisfy sum(n_i) = n + k - 1.
    """

    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[frozenset[tuple[int, int]], ...]
    cut_vertices: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative lowpoint DFS; raises on disconnected input."""
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition requires a connected graph")
    n = g.n
    if n == 0 or g.m == 0:
        decomp = BlockDecomposition((), (), frozenset())
        assert sum(decomp.block_sizes) == max(n + decomp.k - 1, 0)
        return decomp

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    timer = 0
    root = 0
    root_children = 0

    disc[root] = low[root] = timer
    timer += 1
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        pushed = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                if v == root:
                    root_children += 1
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(g.neighbors(w))))
                pushed = True
                break
            if w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if pushed:
            continue
        stack.pop()
        if not stack:
            continue
        u = stack[-1][0]
        if low[v] < low[u]:
            low[u] = low[v]
        if low[v] >= disc[u]:
            # u separates the subtree at v; everything stacked since (u, v)
            # is one block.
            comp = []
            while True:
                e = edge_stack.pop()
                comp.append(e)
                if e == (u, v):
                    break
            raw_blocks.append(comp)
            if u != root:
                cuts.add(u)
    if root_children > 1:
        cuts.add(root)

    indexed = []
    for comp in raw_blocks:
        verts = frozenset(x for e in comp for x in e)
        edges = frozenset((a, b) if a < b else (b, a) for a, b in comp)
        indexed.append((tuple(sorted(verts)), verts, edges))
    indexed.sort(key=lambda t: t[0])
    decomp = BlockDecomposition(
        tuple(v for _, v, _ in indexed),
        tuple(e for _, _, e in indexed),
        frozenset(cuts),
    )
    assert sum(decomp.block_sizes) == n + decomp.k - 1
    return decomp


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return block_decomposition(g).k == 1


@dataclass(frozen=True)
class CycleInfo:
    """A cyclically ordered vertex list; consecutive entries are adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests (BFS from each vertex)."""
    best = None
    for s in g.vertices():
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for w in g.neighbors(v):
                    if dist[w] == -1:
                        dist[w] = dist[v] + 1
                        par[w] = v
                        nxt.append(w)
                    elif w != par[v] and dist[w] >= dist[v]:
                        cand = dist[v] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
    return best


def _lex_least_cycle(g: Graph, length: int, through: int | None) -> tuple[int, ...] | None:
    """Lexicographically least closed vertex sequence of the given length.

    The canonical sequence starts at the cycle's smallest vertex; starts are
    tried in ascending order and the DFS explores neighbors ascending, so the
    first complete sequence found is the least.  `through` restricts the
    search to cycles containing that vertex.
    """
    dist = all_pairs_distances(g)

    def extend(path: list[int], used: set[int], start: int) -> tuple[int, ...] | None:
        depth = len(path)
        cur = path[-1]
        if depth == length:
            return tuple(path) if g.has_edge(cur, start) else None
        # After appending w there are length - depth edges left on the route
        # back to start (including the closing edge).
        remaining = length - depth
        for w in g.neighbors(cur):
            if w <= start or w in used:
                continue
            if dist.d(w, start) > remaining or dist.d(w, start) < 0:
                continue
            if through is not None and through not in used and through != w:
                dv = dist.d(w, through)
                if dv < 0 or dv + dist.d(through, start) > remaining:
                    continue
            path.append(w)
            used.add(w)
            found = extend(path, used, start)
            if found is not None:
                return found
            path.pop()
            used.remove(w)
        return None

    for start in g.vertices():
        if through is not None and through < start:
            break
        found = extend([start], {start}, start)
        if found is not None:
            return found
    return None


def shortest_cycle(g: Graph) -> CycleInfo | None:
    """A shortest cycle with deterministic lexicographic tie-break, or None."""
    glen = girth(g)
    if glen is None:
        return None
    seq = _lex_least_cycle(g, glen, None)
    assert seq is not None
    return CycleInfo(seq)


def shortest_cycle_through(g: Graph, v: int) -> CycleInfo | None:
    """A shortest cycle containing v (lexicographic tie-break), or None."""
    if not 0 <= v < g.n:
        raise GraphConstructionError(f"vertex out of range: {v}")
    best = None
    # Remove v; a cycle through v is v, a, ..., b, v with the inner path
    # avoiding v, so its length is d_{G-v}(a, b) + 2.
    rest = Graph(g.n, [e for e in g.edges if v not in e])
    dist = all_pairs_distances(rest)
    nbrs = g.neighbors(v)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            dab = dist.d(a, b)
            if dab >= 0 and (best is None or dab + 2 < best):
                best = dab + 2
    if best is None:
        return None
    seq = _lex_least_cycle(g, best, v)
    assert seq is not None
    return CycleInfo(seq)
