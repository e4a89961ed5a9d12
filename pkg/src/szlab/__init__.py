"""szlab: exact Wiener/Szeged index computation and gap-bound verification.

The package computes W, Sz, Sz* and the per-edge distance partitions
exactly, exposes the pair-surplus machinery behind the lower bound
Sz - W >= 4n - 8 for connected bipartite graphs with m >= n, constructs the
equality family (a 4-cycle plus a hanging tree), and verifies the bound
exhaustively over isomorph-free enumerations.
"""

from .canon import canonical_code, canonical_form, is_isomorphic
from .enumeration import (
    EnumerationSpec,
    StreamRecord,
    VerificationReport,
    generate,
    ingest_graph6_stream,
    verify_conjecture,
)
from .errors import (
    DisconnectedGraphError,
    EdgeListFormatError,
    Graph6Error,
    GraphConstructionError,
    HypothesisError,
    SizeLimitError,
    SzlabError,
)
from .extremal import (
    ExtremalGraph,
    RootedTree,
    extremal_family,
    is_extremal_form,
    rooted_trees,
    verify_extremal_gaps,
)
from .formats import format_edge_list, parse_edge_list, parse_graph6, to_graph6
from .graphs import (
    Bipartition,
    BlockDecomposition,
    CycleInfo,
    DistanceMatrix,
    Graph,
    OddCycleWitness,
    all_pairs_distances,
    bipartition,
    block_decomposition,
    complete_bipartite,
    cycle_graph,
    from_edge_list,
    girth,
    is_bipartite,
    is_connected,
    is_two_connected,
    path_graph,
    shortest_cycle,
    shortest_cycle_through,
    star_graph,
)
from .invariants import (
    EdgePartition,
    InvariantReport,
    MuTable,
    compute_invariants,
    edge_partition,
    edge_partitions,
    gap,
    mu,
    mu_table,
    revised_szeged,
    revised_szeged_times4,
    szeged,
    wiener,
)
from .proofs import (
    AntipodalCheck,
    GapDecomposition,
    SurplusCheck,
    SurplusMap,
    check_antipodal_cycle,
    check_min_pair_surplus,
    gap_decomposition,
    surplus_map,
)

__version__ = "0.1.0"
