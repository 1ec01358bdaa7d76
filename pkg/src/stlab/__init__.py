"""Exact verification tools for [s,t]-graphs, pancyclicity and related extremal facts."""
from .graph import (
    Graph,
    GraphBuilder,
    GraphError,
    add_edge,
    closed_neighbors,
    complement,
    degree,
    edge_count,
    edges_between,
    encode_graph6,
    induced_subgraph,
    neighbors,
    new_graph,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
)
from .properties import (
    PropertySummary,
    StQuery,
    chvatal_erdos_holds,
    cycle_spectrum,
    has_cycle_of_length,
    independence_number,
    is_hamiltonian,
    is_pancyclic,
    is_st_graph,
    is_triangle_free,
    min_induced_size,
    ore_holds,
    st_violation_witness,
    summarize,
    vertex_connectivity,
)
from .constructions import (
    BlowupParams,
    blow_up,
    c5_blowup,
    complete_graph,
    complete_minus_edge,
    cycle_graph,
    join,
    z_graph,
)
from .canon import CanonicalForm, are_isomorphic, canonical_form
from .generate import burnside_graph_count, generate

__version__ = "0.1.0"
