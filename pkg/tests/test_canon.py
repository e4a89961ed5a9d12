from itertools import permutations

import pytest

from szlab.canon import canonical_code, canonical_form, is_isomorphic
from szlab.errors import SizeLimitError
from szlab.formats import parse_graph6
from szlab.graphs import Graph, path_graph, star_graph

from .oracles import (
    all_labeled_trees,
    brute_isomorphic,
    labeled_orbits,
    mask_to_graph,
    pair_positions,
)


def test_relabelings_share_code():
    a = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_code(a) == canonical_code(b)
    assert is_isomorphic(a, b)


def test_different_graphs_different_codes():
    assert canonical_code(path_graph(4)) != canonical_code(star_graph(3))
    assert not is_isomorphic(path_graph(4), star_graph(3))


def test_canonical_form_is_fixpoint(enumerated):
    for graphs in enumerated.values():
        for g in graphs:
            cf = canonical_form(g)
            assert canonical_code(cf) == canonical_code(g)
            assert cf == canonical_form(cf)


def test_code_parses_back_to_member_of_class(c4_pendant):
    code = canonical_code(c4_pendant)
    assert brute_isomorphic(parse_graph6(code.decode("ascii")), c4_pendant)


def test_trees_on_four_vertices_give_two_codes():
    # All 4!-labelings of the two tree shapes collapse to exactly 2 codes.
    codes = set()
    for edges in all_labeled_trees(4):
        for perm in permutations(range(4)):
            codes.add(canonical_code(Graph(4, [(perm[u], perm[v]) for u, v in edges])))
    assert len(codes) == 2


def test_size_limit():
    with pytest.raises(SizeLimitError):
        canonical_code(Graph(17, [(0, 1)]))


@pytest.mark.parametrize("n", range(1, 7))
def test_code_agreement_equals_brute_isomorphism_exhaustive(n):
    """Codes classify exactly like permutation brute force, all graphs, n <= 6.

    Ground truth consists of the labeled-mask orbits under all vertex
    permutations; every orbit must be code-constant and no two orbits may
    share a code.
    """
    pairs = pair_positions(n)
    orbits = labeled_orbits(n)
    total = 1 << (n * (n - 1) // 2)
    assert sum(len(o) for o in orbits) == total
    codes_seen = set()
    for orbit in orbits:
        codes = {canonical_code(mask_to_graph(n, mask, pairs)) for mask in orbit}
        assert len(codes) == 1, "isomorphic labelings produced different codes"
        code = codes.pop()
        assert code not in codes_seen, "non-isomorphic graphs shared a code"
        codes_seen.add(code)


def test_is_isomorphic_matches_brute_on_pairs(enumerated):
    graphs = enumerated[6]
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            assert is_isomorphic(g, h) == brute_isomorphic(g, h)


def test_code_invariant_under_random_relabeling_n8(enumerated):
    import random

    rng = random.Random(5150)
    for g in enumerated[8][::7]:  # a spread of the 182 classes
        code = canonical_code(g)
        for _ in range(3):
            perm = list(range(8))
            rng.shuffle(perm)
            relabeled = Graph(8, [(perm[u], perm[v]) for u, v in g.edges])
            assert canonical_code(relabeled) == code


def test_codes_distinct_across_n8_classes(enumerated):
    codes = {canonical_code(g) for g in enumerated[8]}
    assert len(codes) == len(enumerated[8]) == 182
