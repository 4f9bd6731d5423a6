"""Embedded straight-line plane graphs with attaching (degree-1) and internal vertices.

Coordinates come in two modes: "exact" positions are integer lattice pairs
(m, n), "float" positions are plain Euclidean points.  Exact graphs must keep
every edge along one of the six lattice directions so that balance and
incidence checks are integer computations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .geometry import (
    DEFAULT_TOL,
    HexCoord,
    IntersectionKind,
    Segment,
    SegmentRelation,
    Vec2F,
    hex_to_euclid,
    segment_relation,
    segment_relation_exact,
    step_direction,
)

Position = Union[HexCoord, Vec2F]


class VertexKind(Enum):
    ATTACHING = "attaching"
    INTERNAL = "internal"


@dataclass(frozen=True)
class Vertex:
    id: int
    pos: Position
    kind: VertexKind


class GraphValidationError(ValueError):
    """Raised by build_graph; carries one (code, detail) pair per violated invariant."""

    def __init__(self, violations: List[Tuple[str, str]]):
        self.violations = violations
        super().__init__("; ".join(f"{code}: {detail}" for code, detail in violations))

    def codes(self) -> List[str]:
        return [code for code, _ in self.violations]


@dataclass(frozen=True)
class PlaneGraph:
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[int, int], ...]
    mode: str  # "exact" | "float"
    forest: bool = False
    _by_id: Dict[int, Vertex] = field(default_factory=dict, repr=False, compare=False)
    _adj: Dict[int, Tuple[int, ...]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        by_id = {v.id: v for v in self.vertices}
        adj: Dict[int, List[int]] = {v.id: [] for v in self.vertices}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_adj", {i: tuple(ns) for i, ns in adj.items()})

    def vertex(self, vid: int) -> Vertex:
        return self._by_id[vid]

    def neighbors(self, vid: int) -> Tuple[int, ...]:
        return self._adj[vid]

    def degree(self, vid: int) -> int:
        return len(self._adj[vid])

    def euclid(self, vid: int) -> Vec2F:
        pos = self._by_id[vid].pos
        return hex_to_euclid(pos) if isinstance(pos, HexCoord) else pos

    def attaching_ids(self) -> List[int]:
        return [v.id for v in self.vertices if v.kind is VertexKind.ATTACHING]

    def internal_ids(self) -> List[int]:
        return [v.id for v in self.vertices if v.kind is VertexKind.INTERNAL]

    def vertex_count(self) -> int:
        return len(self.vertices)


DegreeProfile = Dict[int, int]


def build_graph(
    vertices: Iterable[Tuple[int, Position, VertexKind]],
    edges: Iterable[Tuple[int, int]],
    mode: str = "exact",
    forest: bool = False,
) -> PlaneGraph:
    """Validate raw vertex/edge lists into a PlaneGraph.

    All violated invariants are collected and raised together as a
    GraphValidationError rather than stopping at the first.
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    violations: List[Tuple[str, str]] = []

    vlist = [Vertex(i, pos, kind) for i, pos, kind in vertices]
    seen_ids = set()
    for v in vlist:
        if v.id in seen_ids:
            violations.append(("DuplicateId", f"vertex id {v.id} repeated"))
        seen_ids.add(v.id)
        want = HexCoord if mode == "exact" else Vec2F
        if not isinstance(v.pos, want):
            violations.append(("BadPosition", f"vertex {v.id} position is not {want.__name__}"))

    elist: List[Tuple[int, int]] = []
    eseen = set()
    for i, j in edges:
        if i == j:
            violations.append(("SelfLoop", f"edge ({i}, {j})"))
            continue
        if i not in seen_ids or j not in seen_ids:
            violations.append(("DanglingEdge", f"edge ({i}, {j}) references a missing id"))
            continue
        key = (min(i, j), max(i, j))
        if key in eseen:
            violations.append(("DuplicateEdge", f"edge {key} repeated"))
            continue
        eseen.add(key)
        elist.append(key)

    g = PlaneGraph(tuple(vlist), tuple(sorted(elist)), mode, forest)

    if not violations:
        for v in vlist:
            if v.kind is VertexKind.ATTACHING and g.degree(v.id) != 1:
                violations.append(
                    ("AttachingDegreeViolation", f"vertex {v.id} has degree {g.degree(v.id)}")
                )
        if not forest and vlist and not _connected(g):
            violations.append(("Disconnected", "graph is not connected"))

    if violations:
        raise GraphValidationError(violations)
    return g


def _connected(g: PlaneGraph) -> bool:
    start = g.vertices[0].id
    seen = {start}
    stack = [start]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def degree_profile(g: PlaneGraph) -> DegreeProfile:
    profile: DegreeProfile = {}
    for v in g.vertices:
        d = g.degree(v.id)
        profile[d] = profile.get(d, 0) + 1
    return profile


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    edge_conflicts: Tuple[Tuple[Tuple[int, int], Tuple[int, int], IntersectionKind], ...]
    vertex_on_edge: Tuple[Tuple[int, Tuple[int, int]], ...]
    coincident_vertices: Tuple[Tuple[int, int], ...]
    zero_length: Tuple[Tuple[int, int], ...]


def _relation(g: PlaneGraph, e1: Tuple[int, int], e2: Tuple[int, int], tol: float) -> SegmentRelation:
    if g.mode == "exact":
        pts = []
        for vid in (*e1, *e2):
            p = g.vertex(vid).pos
            pts.append((p.m, p.n))
        return segment_relation_exact(*pts)
    segs = []
    for i, j in (e1, e2):
        segs.append(Segment(g.euclid(i), g.euclid(j)))
    return segment_relation(segs[0], segs[1], tol)


def check_embedding(g: PlaneGraph, tol: float = DEFAULT_TOL) -> EmbeddingReport:
    """Certify that edge interiors are pairwise disjoint and vertices stay off foreign edges."""
    zero = []
    for i, j in g.edges:
        if g.mode == "exact":
            pi, pj = g.vertex(i).pos, g.vertex(j).pos
            if pi == pj:
                zero.append((i, j))
        elif (g.euclid(i) - g.euclid(j)).norm() <= tol:
            zero.append((i, j))
    zero_set = set(zero)

    coincident = []
    ids = sorted(v.id for v in g.vertices)
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            va, vb = g.vertex(ids[a]), g.vertex(ids[b])
            if g.mode == "exact":
                same = va.pos == vb.pos
            else:
                same = (g.euclid(ids[a]) - g.euclid(ids[b])).norm() <= tol
            if same:
                coincident.append((ids[a], ids[b]))

    conflicts = []
    live = [e for e in g.edges if e not in zero_set]
    for x in range(len(live)):
        for y in range(x + 1, len(live)):
            e1, e2 = live[x], live[y]
            adjacent = bool(set(e1) & set(e2))
            rel = _relation(g, e1, e2, tol)
            if adjacent:
                if rel.kind is not IntersectionKind.SHARED_ENDPOINT:
                    conflicts.append((e1, e2, rel.kind))
            elif rel.kind is not IntersectionKind.DISJOINT:
                conflicts.append((e1, e2, rel.kind))

    on_edge = []
    for vid in ids:
        for e in live:
            if vid in e:
                continue
            if _vertex_on_edge(g, vid, e, tol):
                on_edge.append((vid, e))

    ok = not (conflicts or on_edge or coincident or zero)
    return EmbeddingReport(ok, tuple(conflicts), tuple(on_edge), tuple(coincident), tuple(zero))


def _vertex_on_edge(g: PlaneGraph, vid: int, e: Tuple[int, int], tol: float) -> bool:
    if g.mode == "exact":
        p = g.vertex(vid).pos
        a, b = g.vertex(e[0]).pos, g.vertex(e[1]).pos
        cross = (b.m - a.m) * (p.n - a.n) - (b.n - a.n) * (p.m - a.m)
        if cross != 0:
            return False
        dot = (p.m - a.m) * (b.m - a.m) + (p.n - a.n) * (b.n - a.n)
        length2 = (b.m - a.m) ** 2 + (b.n - a.n) ** 2
        return 0 <= dot <= length2
    p = g.euclid(vid)
    a, b = g.euclid(e[0]), g.euclid(e[1])
    ab = b - a
    L = ab.norm()
    cross = ab.x * (p.y - a.y) - ab.y * (p.x - a.x)
    if abs(cross) > tol * L:
        return False
    t = (ab.x * (p.x - a.x) + ab.y * (p.y - a.y)) / (L * L)
    return -tol <= t <= 1 + tol


def edge_direction(g: PlaneGraph, src: int, dst: int):
    """Unit direction of the edge leaving src, as a step-index pair in exact mode."""
    if g.mode == "exact":
        delta = g.vertex(dst).pos - g.vertex(src).pos
        d, _ = step_direction(delta)
        return d
    v = g.euclid(dst) - g.euclid(src)
    L = v.norm()
    if L == 0:
        raise ValueError(f"zero-length edge ({src}, {dst})")
    return Vec2F(v.x / L, v.y / L)


# -- canonical JSON interchange ------------------------------------------------

def graph_to_json(g: PlaneGraph) -> str:
    verts = []
    for v in sorted(g.vertices, key=lambda v: v.id):
        if isinstance(v.pos, HexCoord):
            pos = [v.pos.m, v.pos.n]
        else:
            pos = [v.pos.x, v.pos.y]
        verts.append({"id": v.id, "kind": v.kind.value, "pos": pos})
    obj = {"mode": g.mode, "vertices": verts, "edges": sorted(g.edges)}
    if g.forest:
        obj["forest"] = True
    return json.dumps(obj, sort_keys=True, indent=None, separators=(",", ":"))


def graph_from_json(text: str) -> PlaneGraph:
    obj = json.loads(text)
    mode = obj["mode"]
    verts = []
    for rec in obj["vertices"]:
        kind = VertexKind(rec["kind"])
        x, y = rec["pos"]
        pos: Position = HexCoord(int(x), int(y)) if mode == "exact" else Vec2F(float(x), float(y))
        verts.append((int(rec["id"]), pos, kind))
    edges = [(int(i), int(j)) for i, j in obj["edges"]]
    return build_graph(verts, edges, mode=mode, forest=bool(obj.get("forest", False)))
