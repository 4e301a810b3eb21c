"""Exact fractional clique-packing toolkit.

Core surface: exact rational LP (lp), graphs and clique enumeration
(graph), packing numbers nu_r / nu*_r (packing), clone symmetrization
(symmetrize), the constructive multipartite packer (multipartite), and
the exhaustive phi table (phi).
"""

from .graph import (
    Graph,
    balanced_profile,
    clone_classes,
    complete_multipartite,
    enumerate_cliques,
    is_complete_multipartite,
    multipartite_profile,
    normalize_profile,
    parse_graph,
    turan_edge_count,
)
from .packing import (
    FractionalPacking,
    TheoremReport,
    check_main_theorem,
    continuous_k,
    integral_k,
    nu_integral,
    nu_star,
    verify_packing,
)

__all__ = [
    "Graph",
    "balanced_profile",
    "clone_classes",
    "complete_multipartite",
    "enumerate_cliques",
    "is_complete_multipartite",
    "multipartite_profile",
    "normalize_profile",
    "parse_graph",
    "turan_edge_count",
    "FractionalPacking",
    "TheoremReport",
    "check_main_theorem",
    "continuous_k",
    "integral_k",
    "nu_integral",
    "nu_star",
    "verify_packing",
]
