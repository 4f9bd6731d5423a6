"""Length minimization over interior vertex positions with pinned legs.

Each sweep moves every interior vertex toward the balance point of its
neighbors (a damped Weiszfeld step on the local star, with the classical
anchor test when a neighbor itself is optimal).  Total length never
increases; convergence is declared when the worst balance residual drops
below tolerance.  Edges that shrink below the collapse threshold merge
their endpoints: merging with a pinned leg is degenerate, merging interior
vertices changes the topology and is recorded rather than hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .geometry import Vec2F
from .graph import PlaneGraph, VertexKind
from .minimality import criticality_residual  # re-exported: the certificate on finished graphs

__all__ = [
    "RelaxProblem",
    "RelaxResult",
    "RelaxStatus",
    "minimize_length",
    "total_length",
    "length_gradient",
    "criticality_residual",
    "problem_from_graph",
]


class RelaxStatus(Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class RelaxProblem:
    pinned: Dict[int, Vec2F]            # leg id -> fixed position
    interior: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    initial: Dict[int, Vec2F] = field(default_factory=dict)
    tolerance: float = 1e-9
    max_iterations: int = 10**5
    collapse_epsilon: float = 1e-7
    damping: float = 0.5

    def __post_init__(self):
        ids = set(self.pinned) | set(self.interior)
        deg = {i: 0 for i in ids}
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        legs = {i for i, d in deg.items() if d == 1}
        if legs != set(self.pinned):
            raise ValueError("pinned set must be exactly the degree-1 vertices")
        seen: Set[int] = set()
        stack = [next(iter(ids))] if ids else []
        adj: Dict[int, List[int]] = {i: [] for i in ids}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        if seen != ids:
            raise ValueError("topology must be connected")


@dataclass(frozen=True)
class RelaxResult:
    interior: Dict[int, Vec2F]
    total_length: float
    residual: float
    merges: Tuple[FrozenSet[int], ...]
    status: RelaxStatus
    iterations: int


def total_length(edges: Sequence[Tuple[int, int]], pos: Dict[int, Vec2F]) -> float:
    return sum((pos[i] - pos[j]).norm() for i, j in edges)


def length_gradient(
    edges: Sequence[Tuple[int, int]], pos: Dict[int, Vec2F], interior: Sequence[int]
) -> Dict[int, Vec2F]:
    """d(total length)/d(position of v): the negated unit-vector sum at v."""
    grad = {v: Vec2F(0.0, 0.0) for v in interior}
    for i, j in edges:
        d = pos[j] - pos[i]
        L = d.norm()
        if L == 0:
            raise ValueError(f"zero-length edge ({i}, {j})")
        u = Vec2F(d.x / L, d.y / L)
        if i in grad:
            grad[i] = grad[i] - u
        if j in grad:
            grad[j] = grad[j] + u
    return grad


def _local_target(v: Vec2F, anchors: List[Vec2F]) -> Vec2F:
    """Balance point of the star at v: Weiszfeld step, or an anchor if one is optimal."""
    for a in anchors:
        sx = sy = 0.0
        ok = True
        for p in anchors:
            if p is a:
                continue
            d = (p - a).norm()
            if d == 0.0:
                ok = False
                break
            sx += (p.x - a.x) / d
            sy += (p.y - a.y) / d
        if ok and math.hypot(sx, sy) <= 1.0 + 1e-12:
            return a
    wx = wy = wsum = 0.0
    for p in anchors:
        d = (p - v).norm()
        if d == 0.0:
            return p
        w = 1.0 / d
        wx += p.x * w
        wy += p.y * w
        wsum += w
    return Vec2F(wx / wsum, wy / wsum)


def minimize_length(
    p: RelaxProblem, trace: Optional[Callable[[float], None]] = None
) -> RelaxResult:
    pos: Dict[int, Vec2F] = dict(p.pinned)
    centroid = Vec2F(
        sum(q.x for q in p.pinned.values()) / len(p.pinned),
        sum(q.y for q in p.pinned.values()) / len(p.pinned),
    )
    for v in p.interior:
        pos[v] = p.initial.get(v, centroid)

    adj: Dict[int, List[int]] = {i: [] for i in pos}
    for i, j in p.edges:
        adj[i].append(j)
        adj[j].append(i)
    alive = sorted(p.interior)
    merges: List[FrozenSet[int]] = []
    edges = list(p.edges)

    def merge(v: int, w: int) -> Optional[RelaxStatus]:
        """Collapse v onto w; degenerate when w is a pinned leg."""
        merges.append(frozenset((v, w)))
        if w in p.pinned:
            return RelaxStatus.DEGENERATE
        alive.remove(v)
        for u in adj[v]:
            if u == w:
                continue
            adj[u] = [w if x == v else x for x in adj[u]]
            if u not in adj[w]:
                adj[w].append(u)
        adj[w] = [u for u in adj[w] if u != v]
        del adj[v], pos[v]
        nonlocal edges
        edges = [
            (min(a if a != v else w, b if b != v else w), max(a if a != v else w, b if b != v else w))
            for a, b in edges
        ]
        edges = sorted({(a, b) for a, b in edges if a != b})
        if not alive:
            return RelaxStatus.DEGENERATE
        return None

    if trace is not None:
        trace(total_length(edges, pos))

    status = RelaxStatus.MAX_ITERATIONS
    sweeps = 0
    while sweeps < p.max_iterations:
        sweeps += 1
        for v in list(alive):
            anchors = [pos[u] for u in adj[v]]
            target = _local_target(pos[v], anchors)
            moved = pos[v] + (target - pos[v]).scaled(p.damping)
            pos[v] = moved
            for u in adj[v]:
                if (pos[u] - moved).norm() < p.collapse_epsilon:
                    bad = merge(v, u)
                    if bad is not None:
                        return RelaxResult(
                            {x: pos[x] for x in alive if x in pos},
                            total_length(edges, pos),
                            float("nan"),
                            tuple(merges),
                            bad,
                            sweeps,
                        )
                    break
        if trace is not None:
            trace(total_length(edges, pos))
        res = _residual(edges, pos, alive)
        if res <= p.tolerance:
            status = RelaxStatus.CONVERGED
            break

    return RelaxResult(
        {v: pos[v] for v in alive},
        total_length(edges, pos),
        _residual(edges, pos, alive),
        tuple(merges),
        status,
        sweeps,
    )


def _residual(edges, pos, interior) -> float:
    if not interior:
        return 0.0
    grad = length_gradient(edges, pos, interior)
    return max(g.norm() for g in grad.values())


def problem_from_graph(g: PlaneGraph, **options) -> RelaxProblem:
    """Relaxation problem for a drawn graph: legs pinned where drawn, interior seeded."""
    pinned = {v.id: g.euclid(v.id) for v in g.vertices if v.kind is VertexKind.ATTACHING}
    interior = tuple(sorted(g.internal_ids()))
    initial = {v: g.euclid(v) for v in interior}
    return RelaxProblem(pinned, interior, tuple(g.edges), initial, **options)
