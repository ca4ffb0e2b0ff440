"""Exact graph coloring via enumeration of small maximal independent sets.

Core pipeline: list every maximal independent set of size at most k in
time proportional to 3**(4k-n) * 4**(n-3k), then drive a 2**n subset
dynamic program that computes the chromatic number and recovers an
optimal proper coloring.  Practical for graphs up to the mid-20s of
vertices.
"""

from .graph import (
    CapExceeded,
    Coloring,
    DimacsError,
    Graph,
    GraphError,
    VERTEX_CAP_DEFAULT,
    VERTEX_CAP_MAX,
    degree_in,
    from_dimacs,
    gen_complete,
    gen_cycle,
    gen_gnp,
    gen_groetzsch,
    gen_named,
    gen_petersen,
    gen_triangles_k4s,
    induced_subgraph,
    is_proper_coloring,
    iter_vertices,
    to_dimacs,
    vertex_mask,
)
from .mis import (
    EnumStats,
    is_maximal_independent,
    mis_bound,
    small_mis,
    small_mis_filtered,
)
from .chromatic import (
    DP_CAP_DEFAULT,
    DP_CAP_MAX,
    DpTable,
    chi_at_most_3,
    chromatic_number,
    extract_coloring,
    solve,
)
from .oracles import brute_force_all_mis, brute_force_chromatic, moon_moser_check

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Coloring",
    "DimacsError",
    "DP_CAP_DEFAULT",
    "DP_CAP_MAX",
    "DpTable",
    "EnumStats",
    "Graph",
    "GraphError",
    "VERTEX_CAP_DEFAULT",
    "VERTEX_CAP_MAX",
    "brute_force_all_mis",
    "brute_force_chromatic",
    "chi_at_most_3",
    "chromatic_number",
    "degree_in",
    "extract_coloring",
    "from_dimacs",
    "gen_complete",
    "gen_cycle",
    "gen_gnp",
    "gen_groetzsch",
    "gen_named",
    "gen_petersen",
    "gen_triangles_k4s",
    "induced_subgraph",
    "is_maximal_independent",
    "is_proper_coloring",
    "iter_vertices",
    "mis_bound",
    "moon_moser_check",
    "small_mis",
    "small_mis_filtered",
    "solve",
    "to_dimacs",
    "vertex_mask",
]
