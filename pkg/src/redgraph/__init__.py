"""Distance-redundant vertices, weak (distance-critical) and strong graphs."""

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    Metrics,
    components,
    delete_vertex,
    diameter,
    distance_matrix,
    induced_subgraph,
    is_connected,
    metrics,
    walk_count_matrix,
)
from .graph6 import Graph6Error, from_graph6, read_graph6, to_graph6, write_graph6
from .canonical import canonical_form, canonical_key, canonical_labeling
from .redundancy import (
    GraphClass,
    LinkKind,
    RedundancyReport,
    classify,
    classify_mask,
    is_redundant_first,
    is_redundant_oracle,
    kth_redundant_def,
    kth_redundant_walks,
    link_kind,
    redundant_mask,
    surround_pairs_matrix,
    surrounds,
    twin_classes,
)
from .transforms import (
    MergeError,
    add_dominating_twins,
    merge,
    partial_short,
    short,
    spider_weaken,
    split_twin,
    strengthen_by_twin_split,
    tensor_product,
)
from .nibble import MeshKind, MeshSpec, NibblePolicy, NibbleTrace, Selector, mesh_distance_query, mesh_graph
from .enumeration import generate_all, generate_connected, kappa, kappa_strong, max_weak_edges, polya_graph_count, stats_table
from .gnp import GnpRow, gnp_scan, p_red_formula, thresholds

__version__ = "0.1.0"
