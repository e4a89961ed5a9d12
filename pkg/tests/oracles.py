"""Independent brute-force recomputations used as test oracles.

Nothing here shares an algorithm with the package: distances come from
Floyd-Warshall instead of BFS, isomorphism from permutation backtracking
instead of canonical codes, girth from per-edge deletion, rooted-tree
counting from labeled Prufer trees deduplicated by recursive subtree
encoding.  Keep it that way; the tests rely on the two routes being
independent.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from szlab.graphs import Graph

INF = float("inf")


def floyd_warshall(g: Graph) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        dk = d[k]
        for i in range(g.n):
            dik = d[i][k]
            if dik is INF:
                continue
            di = d[i]
            for j in range(g.n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def wiener_brute(g: Graph) -> int:
    d = floyd_warshall(g)
    total = 0
    for x in range(g.n):
        for y in range(x + 1, g.n):
            assert d[x][y] is not INF
            total += int(d[x][y])
    return total


def edge_partition_brute(g: Graph, e: tuple[int, int]) -> tuple[int, int, int]:
    d = floyd_warshall(g)
    u, v = e
    n_u = sum(1 for w in range(g.n) if d[u][w] < d[v][w])
    n_v = sum(1 for w in range(g.n) if d[v][w] < d[u][w])
    return n_u, n_v, g.n - n_u - n_v


def szeged_brute(g: Graph) -> int:
    total = 0
    for e in g.edges:
        n_u, n_v, _ = edge_partition_brute(g, e)
        total += n_u * n_v
    return total


def revised_szeged_times4_brute(g: Graph) -> int:
    total = 0
    for e in g.edges:
        n_u, n_v, n_0 = edge_partition_brute(g, e)
        total += (2 * n_u + n_0) * (2 * n_v + n_0)
    return total


def gap_brute(g: Graph) -> int:
    return szeged_brute(g) - wiener_brute(g)


def mu_brute(g: Graph, x: int, y: int, e: tuple[int, int], d=None) -> int:
    if d is None:
        d = floyd_warshall(g)
    u, v = e
    if d[x][u] < d[x][v] and d[y][v] < d[y][u]:
        return 1
    if d[x][v] < d[x][u] and d[y][u] < d[y][v]:
        return 1
    return 0


def mu_pair_sum_brute(g: Graph, x: int, y: int, d=None) -> int:
    if d is None:
        d = floyd_warshall(g)
    return sum(mu_brute(g, x, y, e, d) for e in g.edges)


def surplus_brute(g: Graph, x: int, y: int, d=None) -> int:
    if d is None:
        d = floyd_warshall(g)
    return mu_pair_sum_brute(g, x, y, d) - int(d[x][y])


def pair_contribution_total_brute(g: Graph) -> int:
    d = floyd_warshall(g)
    return sum(mu_pair_sum_brute(g, x, y, d) for x, y in combinations(range(g.n), 2))


def girth_brute(g: Graph) -> int | None:
    # Shortest cycle through edge (u, v) = 1 + d(u, v) in the graph without it.
    best = None
    for e in g.edges:
        rest = Graph(g.n, [f for f in g.edges if f != e])
        d = floyd_warshall(rest)
        u, v = e
        if d[u][v] is not INF:
            cand = int(d[u][v]) + 1
            if best is None or cand < best:
                best = cand
    return best


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking over degree-compatible vertex assignments."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in g.vertices()) != sorted(h.degree(v) for v in h.vertices()):
        return False
    n = g.n
    image = [-1] * n
    used = [False] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        for t in range(n):
            if used[t] or g.degree(v) != h.degree(t):
                continue
            ok = True
            for w in range(v):
                if g.has_edge(v, w) != h.has_edge(image[w], t):
                    ok = False
                    break
            if ok:
                image[v] = t
                used[t] = True
                if assign(v + 1):
                    return True
                used[t] = False
        return False

    return assign(0)


def pair_positions(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def mask_to_graph(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    return Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def graph_to_mask(g: Graph, pairs: list[tuple[int, int]]) -> int:
    index = {p: k for k, p in enumerate(pairs)}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def permute_mask(mask: int, table: list[int]) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << table[k]
        mask >>= 1
        k += 1
    return out


def permutation_tables(n: int) -> list[list[int]]:
    """For each vertex permutation, the induced map on pair-bit positions."""
    pairs = pair_positions(n)
    index = {p: k for k, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            table.append(index[(a, b) if a < b else (b, a)])
        tables.append(table)
    return tables


def labeled_orbits(n: int) -> list[set[int]]:
    """Isomorphism classes of all labeled graphs on n vertices, as mask orbits.

    Pure permutation brute force; the orbits partition the whole labeled
    space, which the caller can verify.
    """
    tables = permutation_tables(n)
    total = 1 << (n * (n - 1) // 2)
    assigned = [False] * total
    orbits = []
    for mask in range(total):
        if assigned[mask]:
            continue
        orbit = {permute_mask(mask, t) for t in tables}
        for member in orbit:
            assert not assigned[member], "orbits overlapped"
            assigned[member] = True
        orbits.append(orbit)
    return orbits


def brute_force_classes(
    n: int, min_edges: int, connected: bool = True, bipartite: bool = True
) -> list[Graph]:
    """Representatives of all isomorphism classes passing the filters.

    Enumerates every labeled graph, keeps those whose degree sequence is
    non-decreasing in the labels (every class has such a labeling), then
    deduplicates by permutation-isomorphism search within invariant buckets.
    """
    pairs = pair_positions(n)
    t = len(pairs)
    rowbits = [0] * n
    for k, (i, j) in enumerate(pairs):
        rowbits[i] |= 1 << k
        rowbits[j] |= 1 << k
    buckets: dict[tuple, list[Graph]] = {}
    for mask in range(1 << t):
        if mask.bit_count() < min_edges:
            continue
        degs = [(mask & rowbits[v]).bit_count() for v in range(n)]
        if any(a > b for a, b in zip(degs, degs[1:])):
            continue
        adj = [[] for _ in range(n)]
        for k in range(t):
            if mask >> k & 1:
                i, j = pairs[k]
                adj[i].append(j)
                adj[j].append(i)
        color = [-1] * n
        is_bip = True
        components = 0
        for root in range(n):
            if color[root] != -1:
                continue
            components += 1
            color[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if color[w] == -1:
                        color[w] = color[v] ^ 1
                        stack.append(w)
                    elif color[w] == color[v]:
                        is_bip = False
        if connected and components != 1:
            continue
        if bipartite and not is_bip:
            continue
        g = mask_to_graph(n, mask, pairs)
        dist = floyd_warshall(g)
        profile = tuple(sorted(tuple(sorted(row)) for row in dist))
        key = (tuple(degs), profile)
        bucket = buckets.setdefault(key, [])
        if not any(brute_isomorphic(g, rep) for rep in bucket):
            bucket.append(g)
    reps = [g for bucket in buckets.values() for g in bucket]
    reps.sort(key=lambda g: (g.m, g.edges))
    return reps


# Rooted-tree oracle: labeled trees from Prufer sequences, each vertex tried
# as root, deduplicated by recursive sorted-subtree encoding.


def prufer_to_edges(seq: list[int], k: int) -> list[tuple[int, int]]:
    degree = [1] * k
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        for leaf in range(k):
            if degree[leaf] == 1:
                edges.append((leaf, x))
                degree[leaf] -= 1
                degree[x] -= 1
                break
    last = [v for v in range(k) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def all_labeled_trees(k: int) -> list[list[tuple[int, int]]]:
    if k == 1:
        return [[]]
    if k == 2:
        return [[(0, 1)]]
    out = []
    seq = [0] * (k - 2)
    while True:
        out.append(prufer_to_edges(seq, k))
        i = k - 3
        while i >= 0 and seq[i] == k - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return out
        seq[i] += 1


def rooted_encoding(adj: list[list[int]], root: int) -> str:
    def enc(v: int, parent: int) -> str:
        children = sorted(enc(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(children) + ")"

    return enc(root, -1)


def rooted_tree_classes_brute(k: int) -> int:
    codes = set()
    for edges in all_labeled_trees(k):
        adj = [[] for _ in range(k)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        for root in range(k):
            codes.add(rooted_encoding(adj, root))
    return len(codes)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, prufer_to_edges(seq, n))
