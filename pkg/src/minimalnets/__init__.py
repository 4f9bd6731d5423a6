"""Length-critical plane networks on fixed attaching points.

Construction and certification of extremal 3-regular networks on the
hexagonal lattice, the sharp vertex-count formulas for degree 3 and 4, a
brute-force census for small leg counts, segment-arrangement builders for
the 4-regular optimum, and a convex length relaxer.
"""

from .bounds import f3, f3_upper, f4, forest_count, verify_recursion
from .geometry import Direction6, HexCoord, Segment, Vec2F, hex_to_euclid, lattice_step, segment_relation
from .graph import PlaneGraph, VertexKind, build_graph, check_embedding, degree_profile, graph_from_json, graph_to_json
from .hn import build_hn, base_h, hn_vertex_count, is_simple, pad
from .minimality import check_minimality, classify_structure, criticality_residual, find_cycles, maximal_cycles
from .quad import Arrangement, arrangement_to_graph, build_arrangement
from .relax import RelaxProblem, RelaxResult, minimize_length
from .enumerator import enumerate_topologies, max_vertices_bruteforce, realize

__version__ = "0.1.0"
