"""Exact mad, (1_1,...,1_a,0_1,...,0_b)-colorings and a discharging audit."""

from .bounds import bound_dkmr, bound_havet_sereni, bound_ours, bounds_table
from .coloring import (
    ColorClass,
    Coloring,
    ColorSpec,
    SaturationState,
    SolveStatus,
    admissible_colors,
    saturation,
    solve_bruteforce,
    solve_exact,
    unique_colored_neighbors,
    verify,
)
from .flow import BACKEND, FlowNetwork, max_flow
from .graph import (
    Graph,
    from_edge_list,
    from_graph6,
    gen,
    gen_below_bound,
    peel,
    read_graph,
    to_edge_list,
    to_graph6,
)
from .mad import densest_subgraph, density_exceeds, mad, mad_bruteforce
from .proof import audit, check_lemma2, closure, discharge, h_value, next_layer, solve_proof_guided

__all__ = [
    "BACKEND", "ColorClass", "ColorSpec", "Coloring", "FlowNetwork", "Graph", "SaturationState",
    "SolveStatus", "admissible_colors", "audit", "bound_dkmr", "bound_havet_sereni", "bound_ours",
    "bounds_table", "check_lemma2", "closure", "densest_subgraph", "density_exceeds", "discharge",
    "from_edge_list", "from_graph6", "gen", "gen_below_bound", "h_value", "mad", "mad_bruteforce",
    "max_flow", "next_layer", "peel", "read_graph", "saturation", "solve_bruteforce", "solve_exact",
    "solve_proof_guided", "to_edge_list", "to_graph6", "unique_colored_neighbors", "verify",
]
