"""Canonical labeling by iterated degree refinement plus backtracking.

The canonical form of a graph is the relabeling whose upper-triangle
adjacency bits (column-major, the graph6 bit order) are lexicographically
least over all labelings reachable from the refinement search tree.  Color
refinement is label-invariant, so two graphs receive equal codes exactly when
they are isomorphic.  Intended scale is n <= 16; enumeration workloads stay
at n <= 8.
"""

from __future__ import annotations

from .errors import SizeLimitError
from .graphs import Graph

MAX_CANON_VERTICES = 16


def _refine(neigh: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    # Re-rank (color, sorted neighbor colors) signatures until stable.  Ranks
    # depend only on the multiset of signatures, never on vertex labels.
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in neigh[v]))) for v in range(len(colors))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _triangle_positions(n: int) -> list[list[int]]:
    pos = [[0] * n for _ in range(n)]
    idx = 0
    for j in range(1, n):
        for i in range(j):
            pos[i][j] = pos[j][i] = idx
            idx += 1
    return pos


def _canonical_labeling(g: Graph) -> list[int]:
    """Map old vertex -> new label minimizing the triangle bit string."""
    n = g.n
    if n <= 1:
        return list(range(n))
    neigh = g._neigh
    pos = _triangle_positions(g.n)
    total = n * (n - 1) // 2
    best_bits: int | None = None
    best: list[int] | None = None

    def encode(colors: list[int]) -> int:
        bits = 0
        for u, v in g.edges:
            bits |= 1 << (total - 1 - pos[colors[u]][colors[v]])
        return bits

    def search(colors: list[int]) -> None:
        nonlocal best_bits, best
        colors = _refine(neigh, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            bits = encode(colors)
            if best_bits is None or bits < best_bits:
                best_bits = bits
                best = colors[:]
            return
        for v in target:
            # Individualize v inside its cell, then re-rank so color values
            # stay label-invariant.
            sigs = [(colors[u], 0 if u == v else 1) for u in range(n)]
            rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
            search([rank[s] for s in sigs])

    search([0] * n)
    assert best is not None
    return best


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    if g.n > MAX_CANON_VERTICES:
        raise SizeLimitError(f"canonical labeling supports n <= {MAX_CANON_VERTICES}, got {g.n}")
    lab = _canonical_labeling(g)
    return Graph(g.n, [(lab[u], lab[v]) for u, v in g.edges])


def canonical_code(g: Graph) -> bytes:
    """Byte string identifying g's isomorphism class (its canonical graph6)."""
    from .formats import to_graph6

    return to_graph6(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_code(g) == canonical_code(h)
