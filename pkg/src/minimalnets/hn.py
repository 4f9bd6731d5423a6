"""The extremal lattice family H_n: base cases, simplicity, and ring padding.

H_2..H_7 are fixed canonical drawings on the hexagonal tiling.  For larger n
the graph grows by padding: every attaching point of a simple graph becomes
an inward vertex of a new surrounding cycle, each gap between circularly
consecutive attaching points is bridged by 1 to 4 new cycle vertices
(depending on how the two freed edge directions meet), and every new cycle
vertex gets a fresh outward attaching edge.  All arithmetic stays on the
lattice; leaving it signals a construction bug and aborts.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from .geometry import Direction6, HexCoord, step_direction
from .graph import PlaneGraph, VertexKind, build_graph
from .minimality import (
    StructureKind,
    check_minimality,
    classify_structure,
    point_in_polygon,
)


class NotSimpleError(ValueError):
    """Padding was asked of a graph that fails the simplicity predicate."""


class AngleCaseUnmatchedError(RuntimeError):
    """A padding gap fell outside the four legal angle cases (internal bug)."""


class PaddingLatticeError(RuntimeError):
    """A padding walk left the lattice or missed its target (internal bug)."""


class SimplicityViolationKind(Enum):
    FIVE_TURN_PATH = "five_turn_path"
    CONSECUTIVE_INGOING = "consecutive_ingoing"
    MULTIPLE_MAX_CYCLES = "multiple_max_cycles"
    CYCLE_NOT_SURROUNDING = "cycle_not_surrounding"


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    violation: Optional[SimplicityViolationKind] = None
    detail: Tuple[int, ...] = ()


@dataclass(frozen=True)
class GapCase:
    pair: Tuple[int, int]  # consecutive attaching-point ids
    angle_sixths: int      # signed angle class of the freed half-lines, in units of 60 degrees
    vertices_added: int    # 1..4, equal to angle_sixths + 3


def _graph(verts, edges) -> PlaneGraph:
    return build_graph(verts, edges, mode="exact")


A = VertexKind.ATTACHING
I = VertexKind.INTERNAL


def base_h(n: int) -> PlaneGraph:
    """Canonical lattice drawings of the six base networks (2 <= n <= 7)."""
    if n == 2:
        return _graph(
            [(0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A)],
            [(0, 1)],
        )
    if n == 3:
        return _graph(
            [
                (0, HexCoord(0, 0), I),
                (1, HexCoord(0, 2), A),
                (2, HexCoord(-1, -1), A),
                (3, HexCoord(1, -1), A),
            ],
            [(0, 1), (0, 2), (0, 3)],
        )
    if n == 4:
        return _graph(
            [
                (0, HexCoord(0, 0), I),
                (1, HexCoord(0, 2), I),
                (2, HexCoord(1, -1), A),
                (3, HexCoord(-1, -1), A),
                (4, HexCoord(1, 3), A),
                (5, HexCoord(-1, 3), A),
            ],
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
        )
    if n == 5:
        return _graph(
            [
                (0, HexCoord(0, 0), I),
                (1, HexCoord(0, 2), I),
                (2, HexCoord(1, 3), I),
                (3, HexCoord(1, -1), A),
                (4, HexCoord(-1, -1), A),
                (5, HexCoord(-1, 3), A),
                (6, HexCoord(2, 2), A),
                (7, HexCoord(1, 5), A),
            ],
            [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)],
        )
    if n in (6, 7):
        hexagon = [
            HexCoord(0, 0), HexCoord(0, 2), HexCoord(1, 3),
            HexCoord(2, 2), HexCoord(2, 0), HexCoord(1, -1),
        ]
        legs = [
            HexCoord(-1, -1), HexCoord(-1, 3), HexCoord(1, 5),
            HexCoord(3, 3), HexCoord(3, -1), HexCoord(1, -3),
        ]
        verts = [(i, p, I) for i, p in enumerate(hexagon)]
        edges = [(i, (i + 1) % 6) for i in range(6)]
        if n == 6:
            verts += [(6 + i, p, A) for i, p in enumerate(legs)]
            edges += [(i, 6 + i) for i in range(6)]
            return _graph(verts, edges)
        # n == 7: the leg at the smallest hexagon vertex becomes a 3-edge tree
        verts += [(6, HexCoord(-1, -1), I)]
        verts += [(7 + i, p, A) for i, p in enumerate(legs[1:])]
        edges += [(0, 6)] + [(i + 1, 7 + i) for i in range(5)]
        verts += [(12, HexCoord(-2, 0), A), (13, HexCoord(-1, -3), A)]
        edges += [(6, 12), (6, 13)]
        return _graph(verts, edges)
    raise ValueError(f"base networks are defined for 2 <= n <= 7, got {n}")


def hn_vertex_count(n: int) -> int:
    """Closed-form vertex count of H_n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    k, i = divmod(n, 6)
    eps = (0, 0, 2, 4, 6, 8)[i]
    return 6 * k * k + 6 * k + 2 * i * k + eps


# -- simplicity -------------------------------------------------------------------


def _turn(g: PlaneGraph, a: int, b: int, c: int) -> int:
    pa, pb, pc = (g.vertex(v).pos for v in (a, b, c))
    if isinstance(pa, HexCoord):
        cross = (pb.m - pa.m) * (pc.n - pb.n) - (pb.n - pa.n) * (pc.m - pb.m)
    else:
        pa, pb, pc = (g.euclid(v) for v in (a, b, c))
        cross = (pb.x - pa.x) * (pc.y - pb.y) - (pb.y - pa.y) * (pc.x - pb.x)
    return (cross > 0) - (cross < 0)


def _five_turn_path(g: PlaneGraph, allowed_edges=None) -> Optional[Tuple[int, ...]]:
    """A 6-vertex path whose four interior turns all bend the same way, if any."""
    adj: Dict[int, List[int]] = {v.id: [] for v in g.vertices}
    for i, j in g.edges:
        if allowed_edges is not None and (i, j) not in allowed_edges:
            continue
        adj[i].append(j)
        adj[j].append(i)

    def extend(path: List[int]) -> Optional[Tuple[int, ...]]:
        if len(path) == 6:
            signs = {_turn(g, path[i], path[i + 1], path[i + 2]) for i in range(4)}
            if signs == {1} or signs == {-1}:
                return tuple(path)
            return None
        for w in adj[path[-1]]:
            if w in path:
                continue
            hit = extend(path + [w])
            if hit:
                return hit
        return None

    for v in sorted(adj):
        hit = extend([v])
        if hit:
            return hit
    return None


def is_simple(g: PlaneGraph) -> SimplicityReport:
    """Decide whether the network admits the ring-padding construction.

    Trees qualify unless they contain a 5-edge path turning the same way at
    all four interior vertices.  Cyclic networks need a unique maximal cycle
    with no two circularly consecutive inward vertices; everything internal
    must sit on it, inside it, or in a pendant tree (itself turn-limited)
    hanging off one of its outward vertices.
    """
    structure = classify_structure(g)
    if structure.kind is StructureKind.TREE:
        path = _five_turn_path(g)
        if path:
            return SimplicityReport(False, SimplicityViolationKind.FIVE_TURN_PATH, path)
        return SimplicityReport(True)
    if structure.kind is StructureKind.MULTI_MAX_CYCLE:
        return SimplicityReport(
            False,
            SimplicityViolationKind.MULTIPLE_MAX_CYCLES,
            tuple(len(c.vertex_ids) for c in structure.maximal),
        )

    cyc = structure.maximal[0]
    ids = cyc.vertex_ids
    m = len(ids)
    for i in range(m):
        a, b = ids[i], ids[(i + 1) % m]
        if a in cyc.ingoing and b in cyc.ingoing:
            return SimplicityReport(False, SimplicityViolationKind.CONSECUTIVE_INGOING, (a, b))

    on_cycle = set(ids)
    poly = []
    for v in ids:
        pos = g.vertex(v).pos
        poly.append((pos.m, pos.n) if isinstance(pos, HexCoord) else (pos.x, pos.y))
    pendant_vertices, pendant_edges = _pendants(g, cyc)
    outside_bad = []
    for vid in g.internal_ids():
        if vid in on_cycle:
            continue
        pos = g.vertex(vid).pos
        pt = (pos.m, pos.n) if isinstance(pos, HexCoord) else (pos.x, pos.y)
        if point_in_polygon(pt, poly) == "inside":
            continue
        if vid in pendant_vertices:
            continue
        outside_bad.append(vid)
    if outside_bad:
        return SimplicityReport(
            False, SimplicityViolationKind.CYCLE_NOT_SURROUNDING, tuple(outside_bad)
        )

    # the attaching structure hanging off the cycle is held to the tree condition
    path = _five_turn_path(g, pendant_edges)
    if path:
        return SimplicityReport(False, SimplicityViolationKind.FIVE_TURN_PATH, path)
    return SimplicityReport(True)


def _pendants(g: PlaneGraph, cyc) -> Tuple[set, set]:
    """Vertices and edges of the trees hanging off the cycle's outward vertices."""
    on_cycle = set(cyc.vertex_ids)
    vertices = set()
    edges = set()
    for root in cyc.outgoing:
        stack = [root]
        seen = {root}
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in on_cycle or w in seen:
                    continue
                seen.add(w)
                vertices.add(w)
                edges.add((min(v, w), max(v, w)))
                stack.append(w)
    return vertices, edges


# -- padding ----------------------------------------------------------------------


def _attach_order(g: PlaneGraph) -> List[int]:
    """Attaching-point ids in counterclockwise circular order around their centroid.

    Comparisons are exact: positions are recentred by N*p - sum(p) and sorted
    by half-plane then cross-product sign (valid in lattice coordinates since
    the drawing map is a positive diagonal scaling).
    """
    pts = [(vid, g.vertex(vid).pos) for vid in sorted(g.attaching_ids())]
    N = len(pts)
    sm = sum(p.m for _, p in pts)
    sn = sum(p.n for _, p in pts)
    rel = [(vid, (N * p.m - sm, N * p.n - sn)) for vid, p in pts]
    for vid, (dm, dn) in rel:
        if dm == 0 and dn == 0:
            raise PaddingLatticeError(f"attaching point {vid} sits at the centroid")

    def half(v) -> int:
        dm, dn = v
        return 0 if (dn > 0 or (dn == 0 and dm > 0)) else 1

    def cmp(a, b) -> int:
        (va, pa), (vb, pb) = a, b
        ha, hb = half(pa), half(pb)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = pa[0] * pb[1] - pb[0] * pa[1]
        if cross != 0:
            return -1 if cross > 0 else 1
        da = pa[0] * pa[0] + pa[1] * pa[1]
        db = pb[0] * pb[0] + pb[1] * pb[1]
        if da != db:
            return -1 if da < db else 1
        return -1 if va < vb else 1

    return [vid for vid, _ in sorted(rel, key=cmp_to_key(cmp))]


def pad_detailed(g: PlaneGraph) -> Tuple[PlaneGraph, List[GapCase]]:
    """Pad a simple network; also return the per-gap angle bookkeeping."""
    report = is_simple(g)
    if not report.simple:
        raise NotSimpleError(f"cannot pad: {report.violation.value} at {report.detail}")
    if g.mode != "exact":
        raise ValueError("padding is defined on exact lattice graphs")

    order = _attach_order(g)
    n_old = len(order)
    inward: Dict[int, Direction6] = {}
    for vid in order:
        (nbr,) = g.neighbors(vid)
        d, span = step_direction(g.vertex(nbr).pos - g.vertex(vid).pos)
        inward[vid] = d

    verts: List[Tuple[int, HexCoord, VertexKind]] = []
    for v in g.vertices:
        kind = VertexKind.INTERNAL if v.id in inward else v.kind
        verts.append((v.id, v.pos, kind))
    edges: List[Tuple[int, int]] = list(g.edges)
    fresh = max(v.id for v in g.vertices) + 1
    occupied = {(v.pos.m, v.pos.n) for v in g.vertices}

    gaps: List[GapCase] = []
    for idx in range(n_old):
        a, b = order[idx], order[(idx + 1) % n_old]
        depart = inward[a].rotate(-2)
        arrive = inward[b].rotate(2)
        t = (arrive.k + 3 - depart.k) % 6
        if t not in (1, 2, 3, 4):
            raise AngleCaseUnmatchedError(f"gap ({a}, {b}) has no legal angle case (t={t})")
        if t == 4 and len(g.edges) > 1:
            raise AngleCaseUnmatchedError("the +60 degree case only occurs for the one-edge graph")
        gaps.append(GapCase((a, b), t - 3, t))

        pos = g.vertex(a).pos
        d = depart
        prev = a
        for _ in range(t):
            pos = pos + d.step()
            key = (pos.m, pos.n)
            if not pos.is_honeycomb() or key in occupied:
                raise PaddingLatticeError(f"padding walk left the lattice at {key}")
            occupied.add(key)
            w = fresh
            fresh += 1
            verts.append((w, pos, VertexKind.INTERNAL))
            edges.append((prev, w))
            # third direction at the new ring vertex points outward
            leg = pos + d.rotate(-1).step()
            leg_key = (leg.m, leg.n)
            if leg_key in occupied:
                raise PaddingLatticeError(f"attaching edge collides at {leg_key}")
            occupied.add(leg_key)
            verts.append((fresh, leg, VertexKind.ATTACHING))
            edges.append((w, fresh))
            fresh += 1
            prev = w
            d = d.rotate(1)
        if pos + d.step() != g.vertex(b).pos:
            raise PaddingLatticeError(f"padding walk missed attaching point {b}")
        edges.append((prev, b))

    assert sum(gap.vertices_added for gap in gaps) == n_old + 6
    out = build_graph(verts, edges, mode="exact")
    assert check_minimality(out).ok, "padded graph lost the balance condition"
    return out, gaps


def pad(g: PlaneGraph) -> PlaneGraph:
    return pad_detailed(g)[0]


@functools.lru_cache(maxsize=None)
def build_hn(n: int) -> PlaneGraph:
    """H_n: the base drawing for n <= 7, otherwise the padding of H_(n-6)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n <= 7:
        return base_h(n)
    return pad(build_hn(n - 6))
