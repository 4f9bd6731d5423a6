"""Balance certification and cycle structure of embedded networks.

A graph is length-critical when at every internal vertex the unit vectors of
the incident edges sum to zero.  On the lattice this is an integer identity;
in float mode it is a residual norm compared against a tolerance.

Cycles are oriented with their bounded side on the left.  A degree-3 vertex
of a cycle turns by +60 or -60 degrees; the left turns are exactly the
vertices whose third edge leaves the bounded side ("outgoing"), and for any
simple cycle the turning total forces six more left turns than right ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .geometry import HexCoord, Vec2F, hex_to_euclid, step_direction
from .graph import PlaneGraph, Vertex, VertexKind, build_graph

RESIDUAL_TOL = 1e-8


class ZeroLengthEdgeError(ValueError):
    """An edge of zero length has no unit vector."""


class CycleCapExceededError(RuntimeError):
    """Cycle enumeration grew past the configured cap."""


@dataclass(frozen=True)
class MinimalityReport:
    ok: bool
    residuals: Dict[int, float]
    worst_residual: float
    violations: Tuple[str, ...]
    exact: bool


def _unit_vectors(g: PlaneGraph, vid: int):
    """Unit vectors of the edges leaving vid: integer step pairs in exact mode."""
    out = []
    for w in g.neighbors(vid):
        if g.mode == "exact":
            delta = g.vertex(w).pos - g.vertex(vid).pos
            if delta.m == 0 and delta.n == 0:
                raise ZeroLengthEdgeError(f"edge ({vid}, {w})")
            d, _ = step_direction(delta)
            out.append(d.step())
        else:
            v = g.euclid(w) - g.euclid(vid)
            L = v.norm()
            if L == 0:
                raise ZeroLengthEdgeError(f"edge ({vid}, {w})")
            out.append(Vec2F(v.x / L, v.y / L))
    return out


def check_minimality(g: PlaneGraph, tol: float = RESIDUAL_TOL) -> MinimalityReport:
    """Residual of the balance condition at every internal vertex."""
    residuals: Dict[int, float] = {}
    violations: List[str] = []
    exact = g.mode == "exact"
    worst = 0.0
    for vid in g.internal_ids():
        if g.degree(vid) < 2:
            violations.append(f"internal vertex {vid} has degree {g.degree(vid)}")
        units = _unit_vectors(g, vid)
        if exact:
            sm = sum(u.m for u in units)
            sn = sum(u.n for u in units)
            r = 0.0 if (sm == 0 and sn == 0) else math.hypot(sm * math.sqrt(3) / 2, sn / 2)
        else:
            sx = sum(u.x for u in units)
            sy = sum(u.y for u in units)
            r = math.hypot(sx, sy)
        residuals[vid] = r
        worst = max(worst, r)
    threshold = 0.0 if exact else tol
    ok = worst <= threshold and not violations
    return MinimalityReport(ok, residuals, worst, tuple(violations), exact)


def criticality_residual(g: PlaneGraph) -> float:
    """Max balance residual over internal vertices; exactly 0.0 for balanced lattice graphs."""
    return check_minimality(g).worst_residual


# -- cycles ---------------------------------------------------------------------


@dataclass(frozen=True)
class CycleInfo:
    vertex_ids: Tuple[int, ...]  # traversal order, bounded side kept on the left
    ingoing: FrozenSet[int]
    outgoing: FrozenSet[int]
    interior_area: float

    def __len__(self) -> int:
        return len(self.vertex_ids)

    def gauss_bonnet_defect(self) -> int:
        return len(self.outgoing) - len(self.ingoing)


class StructureKind(Enum):
    TREE = "tree"
    ONE_MAX_CYCLE = "one_max_cycle"
    MULTI_MAX_CYCLE = "multi_max_cycle"


@dataclass(frozen=True)
class StructureClass:
    kind: StructureKind
    maximal: Tuple[CycleInfo, ...]


def _coords(g: PlaneGraph, vid: int):
    pos = g.vertex(vid).pos
    if isinstance(pos, HexCoord):
        return (pos.m, pos.n)
    return (pos.x, pos.y)


def _shoelace2(coords: Sequence[Tuple]) -> float:
    s = 0
    for i in range(len(coords)):
        x1, y1 = coords[i]
        x2, y2 = coords[(i + 1) % len(coords)]
        s += x1 * y2 - x2 * y1
    return s


def _euclid_area(g: PlaneGraph, cycle: Sequence[int]) -> float:
    pts = [g.euclid(v) for v in cycle]
    s = 0.0
    for i in range(len(pts)):
        p, q = pts[i], pts[(i + 1) % len(pts)]
        s += p.x * q.y - q.x * p.y
    return s / 2.0


def _turn_sign(g: PlaneGraph, prev: int, v: int, nxt: int) -> int:
    a = _coords(g, prev)
    b = _coords(g, v)
    c = _coords(g, nxt)
    cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
    return (cross > 0) - (cross < 0)


def cycle_info(g: PlaneGraph, cycle: Sequence[int]) -> CycleInfo:
    """Build a CycleInfo from an unoriented vertex sequence.

    The sequence is reoriented so the bounded region lies on the left, then
    rotated to start at its smallest vertex id.  Degree-3 vertices are
    classified by turn direction: a left turn means the third edge leaves
    the bounded side.
    """
    cyc = list(cycle)
    # orient by integer shoelace sign (sign is scale-invariant)
    s = _shoelace2([_coords(g, v) for v in cyc])
    assert s != 0, "embedded cycle cannot have zero area"
    if s < 0:
        cyc.reverse()
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]

    ingoing, outgoing = set(), set()
    n = len(cyc)
    for i, v in enumerate(cyc):
        if g.degree(v) != 3:
            continue
        t = _turn_sign(g, cyc[i - 1], v, cyc[(i + 1) % n])
        assert t != 0, "cycle edges at a degree-3 vertex cannot be collinear"
        if t > 0:
            outgoing.add(v)
        else:
            ingoing.add(v)
    return CycleInfo(tuple(cyc), frozenset(ingoing), frozenset(outgoing), _euclid_area(g, cyc))


def find_cycles(g: PlaneGraph, cap: int = 10**6) -> List[CycleInfo]:
    """Every simple cycle of the graph, in canonical order; loud failure past cap."""
    G = nx.Graph(g.edges)
    G.add_nodes_from(v.id for v in g.vertices)
    infos = []
    for cyc in nx.simple_cycles(G):
        if len(infos) >= cap:
            raise CycleCapExceededError(f"more than {cap} cycles")
        infos.append(cycle_info(g, cyc))
    infos.sort(key=lambda c: (len(c.vertex_ids), c.vertex_ids))
    return infos


def count_cycles(g: PlaneGraph, cap: int = 10**6) -> int:
    G = nx.Graph(g.edges)
    n = 0
    for _ in nx.simple_cycles(G):
        n += 1
        if n > cap:
            raise CycleCapExceededError(f"more than {cap} cycles")
    return n


def cycle_rank(g: PlaneGraph) -> int:
    G = nx.Graph(g.edges)
    G.add_nodes_from(v.id for v in g.vertices)
    return len(g.edges) - len(g.vertices) + nx.number_connected_components(G)


# -- faces of the embedding -----------------------------------------------------


def _rotation(g: PlaneGraph) -> Dict[int, List[int]]:
    """Neighbors in counterclockwise angular order around each vertex."""
    rot: Dict[int, List[int]] = {}
    for v in g.vertices:
        vid = v.id
        nbrs = list(g.neighbors(vid))
        if g.mode == "exact":
            def key(w, vid=vid):
                d, _ = step_direction(g.vertex(w).pos - g.vertex(vid).pos)
                return d.k
        else:
            def key(w, vid=vid):
                d = g.euclid(w) - g.euclid(vid)
                return math.atan2(d.y, d.x)
        rot[vid] = sorted(nbrs, key=key)
    return rot


def faces(g: PlaneGraph) -> List[List[int]]:
    """All face boundary walks of the embedding (bounded faces counterclockwise).

    Bridges appear twice in their face's walk, so a walk is a simple cycle
    exactly when it has no repeated vertices.
    """
    rot = _rotation(g)
    index = {vid: {w: i for i, w in enumerate(ns)} for vid, ns in rot.items()}
    unused = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    walks = []
    while unused:
        e = min(unused)
        walk = []
        u, v = e
        while (u, v) in unused:
            unused.remove((u, v))
            walk.append(u)
            ns = rot[v]
            i = index[v][u]
            w = ns[(i - 1) % len(ns)]  # clockwise from the reversed edge: left side stays on one face
            u, v = v, w
        walks.append(walk)
    return walks


def bounded_faces(g: PlaneGraph) -> List[CycleInfo]:
    """Faces whose boundary is a simple cycle around a bounded region."""
    out = []
    for walk in faces(g):
        if len(walk) < 3 or len(set(walk)) != len(walk):
            continue
        if _euclid_area(g, walk) > 0:
            out.append(cycle_info(g, walk))
    out.sort(key=lambda c: (len(c.vertex_ids), c.vertex_ids))
    return out


# -- maximal cycles and classification -------------------------------------------


def point_in_polygon(pt, poly: Sequence[Tuple]) -> str:
    """'inside' | 'boundary' | 'outside' by exact crossing count (exact for ints)."""
    px, py = pt
    n = len(poly)
    for i in range(n):
        ax, ay = poly[i]
        bx, by = poly[(i + 1) % n]
        cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        if cross == 0 and min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
            return "boundary"
    crossings = 0
    for i in range(n):
        ax, ay = poly[i]
        bx, by = poly[(i + 1) % n]
        if (ay > py) != (by > py):
            # x coordinate of the edge at height py (exact when inputs are ints)
            if isinstance(py - ay, int) and isinstance(by - ay, int):
                t = Fraction(py - ay, by - ay)
            else:
                t = (py - ay) / (by - ay)
            x = ax + t * (bx - ax)
            if x > px:
                crossings += 1
    return "inside" if crossings % 2 == 1 else "outside"


def _cycle_contains(g: PlaneGraph, outer: CycleInfo, inner: CycleInfo) -> bool:
    """Int(inner) subseteq Int(outer) for cycles of an embedded graph."""
    poly = [_coords(g, v) for v in outer.vertex_ids]
    probe = [v for v in inner.vertex_ids if v not in set(outer.vertex_ids)]
    if not probe:
        return True  # same vertex set: same cycle
    return point_in_polygon(_coords(g, probe[0]), poly) == "inside"


def maximal_cycles(g: PlaneGraph) -> List[CycleInfo]:
    """Cycles maximal under interior inclusion.

    Every maximal cycle is the outer boundary of a 2-connected block, so only
    block boundaries are candidates; candidates are then filtered pairwise.
    """
    G = nx.Graph(g.edges)
    G.add_nodes_from(v.id for v in g.vertices)
    candidates: List[CycleInfo] = []
    for comp in nx.biconnected_components(G):
        if len(comp) < 3:
            continue
        sub_edges = [e for e in g.edges if e[0] in comp and e[1] in comp]
        sub = PlaneGraph(tuple(g.vertex(v) for v in sorted(comp)), tuple(sub_edges), g.mode, True)
        boundary = None
        for walk in faces(sub):
            if _euclid_area(sub, walk) < 0:
                boundary = walk
                break
        assert boundary is not None and len(set(boundary)) == len(boundary)
        candidates.append(cycle_info(g, boundary))

    result = []
    for c in candidates:
        if any(d is not c and _cycle_contains(g, d, c) for d in candidates):
            continue
        result.append(c)
    result.sort(key=lambda c: (len(c.vertex_ids), c.vertex_ids))

    bridge_list = list(nx.bridges(G))
    bridges = set(bridge_list) | {(b, a) for a, b in bridge_list}
    for c in result:
        for v in c.outgoing:
            third = [w for w in g.neighbors(v) if w not in _cycle_neighbors(c, v)]
            for w in third:
                if (v, w) not in bridges:
                    raise RuntimeError(
                        f"outgoing edge ({v}, {w}) of a maximal cycle lies on a cycle"
                    )
    return result


def _cycle_neighbors(c: CycleInfo, v: int) -> Tuple[int, int]:
    i = c.vertex_ids.index(v)
    n = len(c.vertex_ids)
    return (c.vertex_ids[i - 1], c.vertex_ids[(i + 1) % n])


def classify_structure(g: PlaneGraph) -> StructureClass:
    if cycle_rank(g) == 0:
        return StructureClass(StructureKind.TREE, ())
    maxc = maximal_cycles(g)
    if len(maxc) == 1:
        return StructureClass(StructureKind.ONE_MAX_CYCLE, tuple(maxc))
    return StructureClass(StructureKind.MULTI_MAX_CYCLE, tuple(maxc))


# -- vertex growth transform ------------------------------------------------------


def attach_extension(g: PlaneGraph, attach_id: int) -> PlaneGraph:
    """Split an attaching point into a lattice vertex with two fresh attaching edges.

    Adds one internal vertex (the old attaching point changes kind) and two
    attaching points, taking an n-point network to an (n+1)-point one.
    """
    if g.mode != "exact":
        raise ValueError("attach_extension requires an exact-mode graph")
    v = g.vertex(attach_id)
    if v.kind is not VertexKind.ATTACHING:
        raise ValueError(f"vertex {attach_id} is not an attaching point")
    (nbr,) = g.neighbors(attach_id)
    u, _ = step_direction(g.vertex(nbr).pos - v.pos)
    fresh = max(w.id for w in g.vertices) + 1
    verts = []
    for w in g.vertices:
        kind = VertexKind.INTERNAL if w.id == attach_id else w.kind
        verts.append((w.id, w.pos, kind))
    edges = list(g.edges)
    for rot in (2, 4):
        p = v.pos + u.rotate(rot).step()
        verts.append((fresh, p, VertexKind.ATTACHING))
        edges.append((attach_id, fresh))
        fresh += 1
    return build_graph(verts, edges, mode="exact")
