"""The family attaining Sz - W = 4n - 8: a 4-cycle plus a hanging tree.

Every member is a 4-cycle and a tree on n - 3 vertices sharing exactly one
vertex (n = 4 degenerates to the bare 4-cycle).  Members are enumerated one
per isomorphism class by generating rooted trees isomorph-free and gluing
each root onto one cycle vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .errors import GraphConstructionError
from .graphs import Graph, block_decomposition, is_bipartite, is_connected, shortest_cycle
from .invariants import gap


@dataclass(frozen=True)
class RootedTree:
    """Tree in preorder with parent pointers; parent[0] is None (the root)."""

    size: int
    parent: tuple[int | None, ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(p, i) for i, p in enumerate(self.parent) if p is not None]


def rooted_trees(k: int) -> list[RootedTree]:
    """All rooted trees on k vertices, one per rooted-isomorphism class.

    Canonical level-sequence successor generation: a tree is encoded by the
    depths of its vertices in preorder with subtrees ordered so the sequence
    is lexicographically maximal; successive sequences are produced directly,
    so no deduplication pass is needed.
    """
    if k < 1:
        raise GraphConstructionError(f"rooted trees need k >= 1, got {k}")
    if k == 1:
        return [RootedTree(1, (None,))]
    levels = list(range(1, k + 1))
    out = []
    while True:
        out.append(_tree_from_levels(levels))
        # Find the last vertex deeper than level 2; the star is the fixpoint.
        p = max((i for i in range(k) if levels[i] > 2), default=None)
        if p is None:
            return out
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        # Repeat the segment starting at the new parent until length k.
        seg = levels[q:p]
        for i in range(p, k):
            levels[i] = seg[(i - p) % len(seg)]


def _tree_from_levels(levels: list[int]) -> RootedTree:
    parent: list[int | None] = [None] * len(levels)
    for i in range(1, len(levels)):
        for j in range(i - 1, -1, -1):
            if levels[j] == levels[i] - 1:
                parent[i] = j
                break
    return RootedTree(len(levels), tuple(parent))


@dataclass(frozen=True)
class ExtremalGraph:
    """A family member; attach_vertex is the shared cycle/tree-root vertex."""

    graph: Graph
    attach_vertex: int


def extremal_family(n: int) -> list[ExtremalGraph]:
    """One member per isomorphism class, built from rooted trees on n - 3 vertices."""
    if n < 4:
        raise GraphConstructionError(f"family members need n >= 4, got {n}")
    members = []
    seen = set()
    for tree in rooted_trees(n - 3):
        # Cycle on 0..3; the tree root is identified with vertex 0 and its
        # remaining vertices become 4..n-1.
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        relabel = lambda t: 0 if t == 0 else t + 3
        edges.extend((relabel(p), relabel(c)) for p, c in tree.edges())
        g = Graph(n, edges)
        assert is_connected(g) and is_bipartite(g) and g.m == g.n
        assert is_extremal_form(g)
        code = canonical_code(g)
        assert code not in seen, "distinct rooted trees produced isomorphic members"
        seen.add(code)
        members.append(ExtremalGraph(g, 0))
    assert len(members) == len(rooted_trees(n - 3))
    return members


def is_extremal_form(g: Graph) -> bool:
    """Recognize the family shape: unicyclic, girth 4, tree mass on one cycle vertex."""
    if g.n < 4 or g.m != g.n:
        return False
    if not is_connected(g) or not is_bipartite(g):
        return False
    cyc = shortest_cycle(g)
    if cyc is None or cyc.length != 4:
        return False
    cuts = block_decomposition(g).cut_vertices
    return sum(1 for v in cyc.vertices if v in cuts) <= 1


def verify_extremal_gaps(n_max: int) -> list[dict]:
    """Assert gap == 4n - 8 for every family member with 4 <= n <= n_max."""
    if n_max < 4:
        raise GraphConstructionError(f"n_max must be >= 4, got {n_max}")
    rows = []
    for n in range(4, n_max + 1):
        members = extremal_family(n)
        gaps = [gap(member.graph) for member in members]
        assert all(value == 4 * n - 8 for value in gaps)
        rows.append({"n": n, "count": len(members), "all_gaps_equal_4n_minus_8": True})
    return rows
