"""Exact honeycomb-lattice coordinates and planar segment predicates.

Lattice points are integer pairs (m, n) drawn in the plane at
(m*sqrt(3)/2, n/2).  With this scaling every edge of the standard hexagonal
tiling is an integer step vector of Euclidean length exactly 1, so angle and
balance arguments can be settled in integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

SQRT3_2 = math.sqrt(3.0) / 2.0

# Unit step vectors in (m, n) coordinates, indexed by direction k.
# Direction k points at 30 + 60*k degrees; k and k+3 are exact negatives.
STEPS: Tuple[Tuple[int, int], ...] = (
    (1, 1),    # k=0,  30 deg
    (0, 2),    # k=1,  90 deg
    (-1, 1),   # k=2, 150 deg
    (-1, -1),  # k=3, 210 deg
    (0, -2),   # k=4, 270 deg
    (1, -1),   # k=5, 330 deg
)

DEFAULT_TOL = 1e-9


class DirectionError(ValueError):
    """A lattice step was requested in a direction illegal at that vertex."""


@dataclass(frozen=True, order=True)
class HexCoord:
    """Integer lattice position; Euclidean image is (m*sqrt3/2, n/2)."""

    m: int
    n: int

    def __add__(self, other: "HexCoord") -> "HexCoord":
        return HexCoord(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "HexCoord") -> "HexCoord":
        return HexCoord(self.m - other.m, self.n - other.n)

    def parity_class(self) -> int:
        """(n - 3m) mod 6: 0 and 2 are the two honeycomb sublattices, 4 the hexagon centers."""
        return (self.n - 3 * self.m) % 6

    def is_honeycomb(self) -> bool:
        return self.parity_class() in (0, 2)

    @staticmethod
    def lattice(m: int, n: int) -> "HexCoord":
        """Construct a vertex of the hexagonal tiling; rejects off-lattice pairs."""
        c = HexCoord(m, n)
        if not c.is_honeycomb():
            raise ValueError(f"({m}, {n}) is not a honeycomb vertex")
        return c


@dataclass(frozen=True)
class Direction6:
    """One of the six unit directions, at angle 30 + 60*k degrees."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 6)

    def step(self) -> HexCoord:
        return HexCoord(*STEPS[self.k])

    def opposite(self) -> "Direction6":
        return Direction6(self.k + 3)

    def rotate(self, sixths: int) -> "Direction6":
        """Rotate by sixths * 60 degrees (positive = counterclockwise)."""
        return Direction6(self.k + sixths)

    def unit_euclid(self) -> "Vec2F":
        dm, dn = STEPS[self.k]
        return Vec2F(dm * SQRT3_2, dn * 0.5)


@dataclass(frozen=True)
class Vec2F:
    """Plain float point/vector in the plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Vec2F") -> "Vec2F":
        return Vec2F(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2F") -> "Vec2F":
        return Vec2F(self.x - other.x, self.y - other.y)

    def scaled(self, s: float) -> "Vec2F":
        return Vec2F(self.x * s, self.y * s)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class Segment:
    """Straight closed segment with distinct endpoints."""

    a: Vec2F
    b: Vec2F

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"zero-length segment at ({self.a.x}, {self.a.y})")

    def length(self) -> float:
        return (self.b - self.a).norm()


class IntersectionKind(Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared_endpoint"
    PROPER_CROSSING = "proper_crossing"
    ENDPOINT_TOUCH = "endpoint_touch"
    OVERLAP = "overlap"


@dataclass(frozen=True)
class SegmentRelation:
    kind: IntersectionKind
    point: Optional[Vec2F] = None


def hex_to_euclid(c: HexCoord) -> Vec2F:
    return Vec2F(c.m * SQRT3_2, c.n * 0.5)


def legal_directions(c: HexCoord) -> Tuple[Direction6, Direction6, Direction6]:
    """The three tiling edges at a honeycomb vertex: odd k on one sublattice, even on the other."""
    p = c.parity_class()
    if p == 0:
        return (Direction6(1), Direction6(3), Direction6(5))
    if p == 2:
        return (Direction6(0), Direction6(2), Direction6(4))
    raise ValueError(f"({c.m}, {c.n}) is not a honeycomb vertex")


def lattice_step(c: HexCoord, d: Direction6) -> HexCoord:
    """Neighbor of c along tiling edge d; raises DirectionError off the legal triple."""
    if d not in legal_directions(c):
        raise DirectionError(f"direction k={d.k} is illegal at ({c.m}, {c.n})")
    return c + d.step()


def step_direction(delta: HexCoord) -> Tuple[Direction6, int]:
    """Decompose an integer offset as length * unit step; raises if not axis-aligned."""
    for k, (dm, dn) in enumerate(STEPS):
        # delta = s * (dm, dn) for a positive integer s
        if dm == 0:
            if delta.m == 0 and delta.n != 0 and (delta.n > 0) == (dn > 0) and delta.n % dn == 0:
                return Direction6(k), delta.n // dn
        elif delta.m % dm == 0:
            s = delta.m // dm
            if s > 0 and delta.n == s * dn:
                return Direction6(k), s
    raise ValueError(f"offset ({delta.m}, {delta.n}) is not a multiple of a lattice step")


def _orient(ax, ay, bx, by, cx, cy, tol: float) -> int:
    """Sign of the turn a->b->c; 0 when c is within tol of the line ab."""
    cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if tol:
        base = math.hypot(bx - ax, by - ay)
        if abs(cross) <= tol * base:
            return 0
    return (cross > 0) - (cross < 0)


def _close(px, py, qx, qy, tol: float) -> bool:
    if tol:
        return math.hypot(px - qx, py - qy) <= tol
    return px == qx and py == qy


def _on_segment(ax, ay, bx, by, px, py, tol: float) -> bool:
    """p assumed collinear with ab: is it within the closed segment?"""
    lo_x, hi_x = min(ax, bx), max(ax, bx)
    lo_y, hi_y = min(ay, by), max(ay, by)
    return lo_x - tol <= px <= hi_x + tol and lo_y - tol <= py <= hi_y + tol


def _relate(a, b, c, d, tol: float) -> SegmentRelation:
    ax, ay = a
    bx, by = b
    cx, cy = c
    dx, dy = d

    shared = [
        _close(ax, ay, cx, cy, tol),
        _close(ax, ay, dx, dy, tol),
        _close(bx, by, cx, cy, tol),
        _close(bx, by, dx, dy, tol),
    ]
    n_shared = sum(shared)

    o1 = _orient(ax, ay, bx, by, cx, cy, tol)
    o2 = _orient(ax, ay, bx, by, dx, dy, tol)
    o3 = _orient(cx, cy, dx, dy, ax, ay, tol)
    o4 = _orient(cx, cy, dx, dy, bx, by, tol)
    collinear = o1 == 0 and o2 == 0

    if n_shared >= 2:
        # identical (or reversed) segments
        return SegmentRelation(IntersectionKind.OVERLAP)
    if n_shared == 1:
        if collinear:
            # same line through the common endpoint: overlap unless they point apart
            if shared[0] or shared[3]:  # a==c or b==d: compare b-a with d-c
                same_side = (bx - ax) * (dx - cx) + (by - ay) * (dy - cy) > 0
            else:  # a==d or b==c
                same_side = (bx - ax) * (dx - cx) + (by - ay) * (dy - cy) < 0
            if same_side:
                return SegmentRelation(IntersectionKind.OVERLAP)
        return SegmentRelation(IntersectionKind.SHARED_ENDPOINT)

    if collinear and o3 == 0 and o4 == 0:
        # same supporting line, no shared endpoints
        if (_on_segment(ax, ay, bx, by, cx, cy, tol) or _on_segment(ax, ay, bx, by, dx, dy, tol)
                or _on_segment(cx, cy, dx, dy, ax, ay, tol)):
            return SegmentRelation(IntersectionKind.OVERLAP)
        return SegmentRelation(IntersectionKind.DISJOINT)

    # an endpoint lying in the other segment's interior
    for (o, sx, sy, tx, ty, px, py) in (
        (o1, ax, ay, bx, by, cx, cy),
        (o2, ax, ay, bx, by, dx, dy),
        (o3, cx, cy, dx, dy, ax, ay),
        (o4, cx, cy, dx, dy, bx, by),
    ):
        if o == 0 and _on_segment(sx, sy, tx, ty, px, py, tol):
            return SegmentRelation(IntersectionKind.ENDPOINT_TOUCH)

    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        # proper crossing: interiors meet at one point
        rx, ry = bx - ax, by - ay
        sx, sy = dx - cx, dy - cy
        denom = rx * sy - ry * sx
        if isinstance(denom, int):
            t = Fraction((cx - ax) * sy - (cy - ay) * sx, denom)
            px, py = ax + t * rx, ay + t * ry
            return SegmentRelation(IntersectionKind.PROPER_CROSSING, Vec2F(float(px), float(py)))
        t = ((cx - ax) * sy - (cy - ay) * sx) / denom
        return SegmentRelation(
            IntersectionKind.PROPER_CROSSING, Vec2F(ax + t * rx, ay + t * ry)
        )

    return SegmentRelation(IntersectionKind.DISJOINT)


def segment_relation(s1: Segment, s2: Segment, tol: float = DEFAULT_TOL) -> SegmentRelation:
    """Classify how two closed segments meet."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return _relate((s1.a.x, s1.a.y), (s1.b.x, s1.b.y), (s2.a.x, s2.a.y), (s2.b.x, s2.b.y), tol)


def segment_relation_exact(
    a: Tuple[int, int], b: Tuple[int, int], c: Tuple[int, int], d: Tuple[int, int]
) -> SegmentRelation:
    """Exact integer-coordinate variant (lattice (m, n) pairs, tol = 0).

    Incidence is invariant under the positive diagonal scaling to Euclidean
    coordinates, so integer signs decide; a reported crossing point is the
    exact rational intersection mapped to Euclidean floats.
    """
    rel = _relate(a, b, c, d, 0.0)
    if rel.point is not None:
        # recompute exactly in lattice coordinates, then scale
        ax, ay = a
        rx, ry = b[0] - ax, b[1] - ay
        sx, sy = d[0] - c[0], d[1] - c[1]
        denom = rx * sy - ry * sx
        t = Fraction((c[0] - ax) * sy - (c[1] - ay) * sx, denom)
        pm, pn = ax + t * rx, ay + t * ry
        rel = SegmentRelation(rel.kind, Vec2F(float(pm) * SQRT3_2, float(pn) * 0.5))
    return rel
