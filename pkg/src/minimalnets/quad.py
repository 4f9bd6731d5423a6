"""Extremal 4-regular networks from segment arrangements.

m segments, every pair crossing properly, no three concurrent: the crossings
are balanced degree-4 vertices (two straight lines through a point), so the
induced network is length-critical with C(m,2) + 2m vertices.  Segments are
drawn as perturbed near-diameters of a circle; distinct small endpoint
perturbations guarantee all pairs cross, and a seeded rejection loop retries
until no crossing degenerates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .geometry import DEFAULT_TOL, IntersectionKind, Segment, Vec2F, segment_relation
from .graph import PlaneGraph, VertexKind, build_graph


class OddAttachCountError(ValueError):
    """4-regular networks need an even number of attaching points."""


class ArrangementError(RuntimeError):
    """No valid arrangement found within the retry budget (should not happen)."""


@dataclass(frozen=True)
class Arrangement:
    segments: Tuple[Segment, ...]
    crossing_points: Tuple[Vec2F, ...]


# minimum spacing between consecutive cut points along a segment: keeps the
# balance residual at crossings down near double rounding (~1e-16 / length)
MIN_STATION_GAP = 2e-3

_CENTER = Vec2F(1.0, 0.5)
_RADIUS = 2.5


def _candidate(m: int, rng: random.Random) -> List[Segment]:
    """Chords of a circle carried by the fan of lines y = s*x - s^2.

    Lines i and j cross at (s_i + s_j, s_i * s_j), so distinct pairs can
    never share a crossing, and consecutive crossings along a line are a
    slope gap apart (>= 0.7/m here).  The seeded jitter keeps the slopes
    strictly increasing while varying the geometry.
    """
    slopes = [(i + 0.3 * rng.random()) / m for i in range(m)]
    segs = []
    for s in slopes:
        # clip y = s*x - s^2 to the circle: solve |p + t*d - c|^2 = R^2
        p = Vec2F(0.0, -s * s)
        d = Vec2F(1.0, s)
        L2 = 1.0 + s * s
        rel = p - _CENTER
        half = -(rel.x * d.x + rel.y * d.y) / L2
        disc = half * half - (rel.x * rel.x + rel.y * rel.y - _RADIUS * _RADIUS) / L2
        root = math.sqrt(disc)
        a = Vec2F(p.x + (half - root) * d.x, p.y + (half - root) * d.y)
        b = Vec2F(p.x + (half + root) * d.x, p.y + (half + root) * d.y)
        segs.append(Segment(a, b))
    return segs


def _crossings(segs: List[Segment], tol: float) -> Dict[Tuple[int, int], Vec2F]:
    pts: Dict[Tuple[int, int], Vec2F] = {}
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            rel = segment_relation(segs[i], segs[j], tol)
            if rel.kind is not IntersectionKind.PROPER_CROSSING:
                raise ValueError(f"segments {i} and {j}: {rel.kind.value}")
            pts[(i, j)] = rel.point
    return pts


def _validate(segs: List[Segment], tol: float) -> Dict[Tuple[int, int], Vec2F]:
    pts = _crossings(segs, tol)
    items = list(pts.items())
    for x in range(len(items)):
        for y in range(x + 1, len(items)):
            (pi, p), (qi, q) = items[x], items[y]
            if (p - q).norm() <= tol:
                raise ValueError(f"crossings {pi} and {qi} coincide")
    for i, s in enumerate(segs):
        stations = [0.0, 1.0]
        d = s.b - s.a
        L2 = d.x * d.x + d.y * d.y
        for key, p in pts.items():
            if i in key:
                stations.append(((p.x - s.a.x) * d.x + (p.y - s.a.y) * d.y) / L2)
        stations.sort()
        L = math.sqrt(L2)
        for t0, t1 in zip(stations, stations[1:]):
            if (t1 - t0) * L < MIN_STATION_GAP:
                raise ValueError(f"cut points too close on segment {i}")
    return pts


def build_arrangement(m: int, seed: int = 0, tol: float = DEFAULT_TOL) -> Arrangement:
    """m pairwise properly crossing segments, no three concurrent; seeded and deterministic."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    rng = random.Random(seed)
    for _ in range(100):
        segs = _candidate(m, rng)
        try:
            pts = _validate(segs, tol)
        except ValueError:
            continue
        ordered = [pts[k] for k in sorted(pts)]
        return Arrangement(tuple(segs), tuple(ordered))
    raise ArrangementError(f"no valid arrangement for m={m} after 100 attempts")


def arrangement_to_graph(arr: Arrangement, tol: float = DEFAULT_TOL) -> PlaneGraph:
    """Subdivide each segment at its crossings: endpoints attach, crossings are degree 4."""
    segs = list(arr.segments)
    pts = _validate(segs, tol)

    verts: List[Tuple[int, Vec2F, VertexKind]] = []
    next_id = 0
    ends: List[Tuple[int, int]] = []
    for s in segs:
        verts.append((next_id, s.a, VertexKind.ATTACHING))
        verts.append((next_id + 1, s.b, VertexKind.ATTACHING))
        ends.append((next_id, next_id + 1))
        next_id += 2
    cross_id: Dict[Tuple[int, int], int] = {}
    for key in sorted(pts):
        verts.append((next_id, pts[key], VertexKind.INTERNAL))
        cross_id[key] = next_id
        next_id += 1

    edges: List[Tuple[int, int]] = []
    for i, s in enumerate(segs):
        d = s.b - s.a
        L2 = d.x * d.x + d.y * d.y
        stations = [(0.0, ends[i][0]), (1.0, ends[i][1])]
        for key, vid in cross_id.items():
            if i in key:
                p = pts[key]
                t = ((p.x - s.a.x) * d.x + (p.y - s.a.y) * d.y) / L2
                stations.append((t, vid))
        stations.sort()
        for (_, u), (_, v) in zip(stations, stations[1:]):
            edges.append((u, v))

    return build_graph(verts, edges, mode="float")
