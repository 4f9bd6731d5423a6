import pytest

from minimalnets.geometry import HexCoord
from minimalnets.graph import VertexKind, build_graph


@pytest.fixture
def double_hexagon():
    """Two lattice hexagons joined by a two-edge path: the classic two-max-cycle shape."""
    hex_a = [(0, 0), (0, 2), (1, 3), (2, 2), (2, 0), (1, -1)]
    hex_b = [(m + 2, n + 6) for m, n in hex_a]
    verts = [(i, HexCoord(*p), VertexKind.INTERNAL) for i, p in enumerate(hex_a)]
    verts += [(6 + i, HexCoord(*p), VertexKind.INTERNAL) for i, p in enumerate(hex_b)]
    verts.append((12, HexCoord(1, 5), VertexKind.INTERNAL))
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    edges += [(2, 12), (12, 6)]  # (1,3) - (1,5) - (2,6)
    return build_graph(verts, edges, mode="exact")
