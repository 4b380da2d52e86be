"""Graph representation, I/O, blocks, degeneracy and canonical forms."""

from .blocks import (
    BlockTree,
    DisconnectedGraphError,
    LeafBlock,
    bad_blocks,
    block_decomposition,
    is_gallai_tree,
    is_gdp_tree,
)
from .canonical import CanonicalForm, are_isomorphic, canonical_form, canonical_key
from .catalogue import all_graphs, connected_graphs, connected_graphs_up_to
from .connectivity import is_three_connected, vertex_connectivity_at_least
from .core import (
    CapMap,
    CapMapError,
    Edge,
    Graph,
    GraphFormatError,
    Vertex,
    edge_key,
    sort_vertices,
    vertex_key,
)
from .degeneracy import degeneracy, degeneracy_ordering, truncated_cap
from .io import (
    graph_from_json,
    load_graph,
    parse_caps_spec,
    parse_graph,
    parse_graph6,
    to_graph6,
)

__all__ = [
    "BlockTree",
    "DisconnectedGraphError",
    "LeafBlock",
    "bad_blocks",
    "block_decomposition",
    "is_gallai_tree",
    "is_gdp_tree",
    "CanonicalForm",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "all_graphs",
    "connected_graphs",
    "connected_graphs_up_to",
    "is_three_connected",
    "vertex_connectivity_at_least",
    "CapMap",
    "CapMapError",
    "Edge",
    "Graph",
    "GraphFormatError",
    "Vertex",
    "edge_key",
    "sort_vertices",
    "vertex_key",
    "degeneracy",
    "degeneracy_ordering",
    "truncated_cap",
    "graph_from_json",
    "load_graph",
    "parse_caps_spec",
    "parse_graph",
    "parse_graph6",
    "to_graph6",
]
