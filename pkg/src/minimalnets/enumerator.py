"""Desk-scale census of degree-3 balanced network types on few attaching points.

A combinatorial type is a connected graph with degrees 1 and 3, a cyclic
edge order at each degree-3 vertex (the planar rotation), and a direction
label in Z6 per edge end.  Around a degree-3 vertex the three outgoing
labels must read d, d+2, d+4 in rotation order, and the two ends of an edge
differ by 3; fixing one label therefore determines them all, and a labeling
exists iff propagation closes consistently around the cycle.  Types are kept
up to relabeling, rotation of labels, and reflection.

With the vertex-count cap n^2/6 + n the only shapes below 8 legs are trees
(2n-2 vertices) and unicyclic graphs (2n vertices), which keeps the census
exhaustive yet small.  Realization splits cleanly: label consistency is
combinatorial, cycle closure is an exact rational feasibility problem in the
lattice basis, and embeddedness is checked on the drawn result.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .bounds import f3_upper
from .geometry import STEPS, SQRT3_2, Vec2F
from .graph import PlaneGraph, VertexKind, build_graph, check_embedding
from .minimality import check_minimality

Rotation = Tuple[Tuple[int, ...], ...]

GRID_TRIAL_CAP = 10**6


class RealizationStatus(Enum):
    REALIZED_EMBEDDED = "realized_embedded"
    REALIZED_SELF_CROSSING = "realized_self_crossing"
    INFEASIBLE = "infeasible"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class DirectedTopology:
    rotation: Rotation                 # rotation[v] = neighbors of v, counterclockwise
    labels: Tuple[Tuple[int, int, int], ...]  # (u, w, k): edge end at u toward w points along k
    legs: int

    def vertex_count(self) -> int:
        return len(self.rotation)

    def label_map(self) -> Dict[Tuple[int, int], int]:
        return {(u, w): k for u, w, k in self.labels}

    def edges(self) -> List[Tuple[int, int]]:
        out = set()
        for u, ns in enumerate(self.rotation):
            for w in ns:
                out.add((min(u, w), max(u, w)))
        return sorted(out)

    def code(self) -> Tuple:
        return canonical_code(self.rotation)


@dataclass(frozen=True)
class RealizationWitness:
    status: RealizationStatus
    lengths: Optional[Dict[Tuple[int, int], Fraction]]
    graph: Optional[PlaneGraph]
    trials: int = 1


# -- canonical form of a rotation system -------------------------------------------


def _traversal_code(rot: Rotation, u0: int, w0: int) -> Tuple[Tuple[int, ...], ...]:
    """Invariant of the map rooted at directed edge (u0, w0): breadth-first renaming."""
    names = {u0: 0}
    anchor = {u0: w0}
    order = [u0]
    rows = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        ns = rot[v]
        j = ns.index(anchor[v])
        ring = ns[j:] + ns[:j]
        row = []
        for w in ring:
            if w not in names:
                names[w] = len(names)
                anchor[w] = v
                order.append(w)
            row.append(names[w])
        rows.append(tuple(row))
    return tuple(rows)


def canonical_code(rot: Rotation) -> Tuple:
    best = None
    for mirror in (False, True):
        r = tuple(tuple(reversed(ns)) for ns in rot) if mirror else rot
        for u in range(len(r)):
            for w in r[u]:
                code = _traversal_code(r, u, w)
                if best is None or code < best:
                    best = code
    return best


def canonical_rotation(rot: Rotation) -> Rotation:
    """Rebuild the rotation system in the renaming realizing the minimal code."""
    best = None
    for mirror in (False, True):
        r = tuple(tuple(reversed(ns)) for ns in rot) if mirror else rot
        for u in range(len(r)):
            for w in r[u]:
                code = _traversal_code(r, u, w)
                if best is None or code < best[0]:
                    best = (code, r, u, w)
    code, r, u0, w0 = best
    names = {u0: 0}
    anchor = {u0: w0}
    order = [u0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        ns = r[v]
        j = ns.index(anchor[v])
        for w in ns[j:] + ns[:j]:
            if w not in names:
                names[w] = len(names)
                anchor[w] = v
                order.append(w)
    new_rot: List[Tuple[int, ...]] = [()] * len(r)
    for v, ns in enumerate(r):
        renamed = [names[w] for w in ns]
        k = renamed.index(min(renamed))
        new_rot[names[v]] = tuple(renamed[k:] + renamed[:k])
    return tuple(new_rot)


# -- direction labeling --------------------------------------------------------------


def label_rotation(rot: Rotation) -> Optional[Tuple[Tuple[int, int, int], ...]]:
    """Propagate Z6 labels from one seed; None when the cycle holonomy obstructs."""
    labels: Dict[Tuple[int, int], int] = {}

    def set_label(u: int, w: int, k: int) -> bool:
        k %= 6
        if (u, w) in labels:
            return labels[(u, w)] == k
        labels[(u, w)] = k
        if not set_label(w, u, k + 3):
            return False
        ns = rot[u]
        if len(ns) == 3:
            j = ns.index(w)
            if not set_label(u, ns[(j + 1) % 3], k + 2):
                return False
            if not set_label(u, ns[(j + 2) % 3], k + 4):
                return False
        return True

    if not set_label(0, rot[0][0], 0):
        return None
    # connected graph: propagation reaches every edge end
    assert len(labels) == sum(len(ns) for ns in rot)
    return tuple(sorted((u, w, k) for (u, w), k in labels.items()))


def _make_topology(rot: Rotation) -> Optional[DirectedTopology]:
    canon = canonical_rotation(rot)
    labels = label_rotation(canon)
    if labels is None:
        return None
    legs = sum(1 for ns in canon if len(ns) == 1)
    return DirectedTopology(canon, labels, legs)


# -- candidate generation --------------------------------------------------------------


def _skeleton_trees(v: int) -> List[List[Tuple[int, int]]]:
    if v == 1:
        return [[]]
    out = []
    for T in nx.nonisomorphic_trees(v):
        if max(d for _, d in T.degree()) <= 3:
            out.append(sorted(T.edges()))
    return out


def _rotations_for_tree(skeleton: List[Tuple[int, int]], v: int) -> Iterable[Rotation]:
    adj: Dict[int, List[int]] = {i: [] for i in range(v)}
    for i, j in skeleton:
        adj[i].append(j)
        adj[j].append(i)
    incident: Dict[int, List[int]] = {}
    nxt = v
    for i in range(v):
        inc = sorted(adj[i])
        for _ in range(3 - len(adj[i])):
            inc.append(nxt)  # fresh leg vertex
            nxt += 1
        incident[i] = inc
    total = nxt
    choices = []
    for i in range(v):
        first, rest = incident[i][0], incident[i][1:]
        choices.append([(first, *p) for p in itertools.permutations(rest)])
    for combo in itertools.product(*choices):
        rot: List[Tuple[int, ...]] = [()] * total
        for i in range(v):
            rot[i] = combo[i]
        for i in range(v):
            for w in rot[i]:
                if w >= v:
                    rot[w] = (i,)
        yield tuple(rot)


def _binary_shapes(b: int) -> List:
    """Ordered full binary trees with b internal nodes (leaves become legs)."""
    if b == 0:
        return [None]
    out = []
    for lb in range(b):
        for L in _binary_shapes(lb):
            for R in _binary_shapes(b - 1 - lb):
                out.append((L, R))
    return out


def _rotations_unicyclic(n: int, c: int) -> Iterable[Rotation]:
    """Cycle of length c with pendant binary trees totaling n - c internal vertices."""
    budget = n - c
    shape_cache = {b: _binary_shapes(b) for b in range(budget + 1)}

    def shape_size(s) -> int:
        return 0 if s is None else 1 + shape_size(s[0]) + shape_size(s[1])

    for comp in itertools.product(range(budget + 1), repeat=c):
        if sum(comp) != budget:
            continue
        for shapes in itertools.product(*[shape_cache[b] for b in comp]):
            rot: Dict[int, Tuple[int, ...]] = {}
            nxt = c

            def build(shape, parent) -> int:
                nonlocal nxt
                me = nxt
                nxt += 1
                if shape is None:
                    rot[me] = (parent,)
                    return me
                l = build_placeholder = None
                left = build(shape[0], me)
                right = build(shape[1], me)
                rot[me] = (parent, left, right)
                return me

            roots = []
            for i, shape in enumerate(shapes):
                roots.append(build(shape, i))
            # cycle vertices: two cyclic orders of (prev, next, pendant)
            for flips in itertools.product((False, True), repeat=c):
                rot2 = dict(rot)
                for i in range(c):
                    prev, nxt_v = (i - 1) % c, (i + 1) % c
                    rot2[i] = (prev, nxt_v, roots[i]) if not flips[i] else (prev, roots[i], nxt_v)
                total = max(rot2) + 1
                yield tuple(rot2[i] for i in range(total))


def enumerate_topologies(n: int) -> List[DirectedTopology]:
    """All labelable combinatorial types on n legs under the quadratic vertex cap."""
    if not 2 <= n <= 7:
        raise ValueError(f"census supports 2 <= n <= 7, got {n}")
    cap = math.floor(f3_upper(n))
    found: Dict[Tuple, DirectedTopology] = {}

    def offer(rot: Rotation):
        code = canonical_code(rot)
        if code in found:
            return
        topo = _make_topology(rot)
        if topo is not None:
            found[code] = topo

    if n == 2:
        offer(((1,), (0,)))
    else:
        for skeleton in _skeleton_trees(n - 2):
            for rot in _rotations_for_tree(skeleton, n - 2):
                if len(rot) <= cap:
                    offer(rot)
    if 2 * n <= cap:
        for c in range(3, n + 1):
            for rot in _rotations_unicyclic(n, c):
                offer(rot)
    return [found[code] for code in sorted(found)]


# -- geometric realization ---------------------------------------------------------------


def _cycle_of(topo: DirectedTopology) -> Optional[List[int]]:
    G = nx.Graph(topo.edges())
    basis = nx.cycle_basis(G)
    if not basis:
        return None
    assert len(basis) == 1, "census shapes are trees or unicyclic"
    return basis[0]


def _cross(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _closure_lengths(dirs: List[int]) -> Optional[List[Fraction]]:
    """Positive rational lengths with sum(l_e * step(d_e)) = 0, min length 1, or None."""
    base = (sum(STEPS[d][0] for d in dirs), sum(STEPS[d][1] for d in dirs))
    target = (-base[0], -base[1])
    k = len(dirs)
    slack = [Fraction(0)] * k
    if target == (0, 0):
        return [Fraction(1) + s for s in slack]
    # one positive column
    for i, d in enumerate(dirs):
        u = STEPS[d]
        if _cross(u, target) == 0 and (u[0] * target[0] + u[1] * target[1]) > 0:
            s = Fraction(target[0], u[0]) if u[0] else Fraction(target[1], u[1])
            slack[i] = s
            return [Fraction(1) + x for x in slack]
    # two columns
    for i in range(k):
        for j in range(i + 1, k):
            u, v = STEPS[dirs[i]], STEPS[dirs[j]]
            det = _cross(u, v)
            if det == 0:
                continue
            si = Fraction(_cross(target, v), det)
            sj = Fraction(_cross(u, target), det)
            if si >= 0 and sj >= 0:
                out = list(slack)
                out[i], out[j] = si, sj
                return [Fraction(1) + x for x in out]
    return None


def _draw(topo: DirectedTopology, lengths: Dict[Tuple[int, int], Fraction]) -> PlaneGraph:
    lab = topo.label_map()
    pos: Dict[int, Tuple[Fraction, Fraction]] = {0: (Fraction(0), Fraction(0))}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in topo.rotation[u]:
            if w in pos:
                continue
            L = lengths[(min(u, w), max(u, w))]
            dm, dn = STEPS[lab[(u, w)]]
            pos[w] = (pos[u][0] + L * dm, pos[u][1] + L * dn)
            stack.append(w)
    verts = []
    for v in range(topo.vertex_count()):
        m, q = pos[v]
        kind = VertexKind.ATTACHING if len(topo.rotation[v]) == 1 else VertexKind.INTERNAL
        verts.append((v, Vec2F(float(m) * SQRT3_2, float(q) * 0.5), kind))
    return build_graph(verts, topo.edges(), mode="float")


def realize(topo: DirectedTopology) -> RealizationWitness:
    """Decide geometric existence: exact cycle closure, then an embedding check."""
    cycle = _cycle_of(topo)
    edges = topo.edges()
    lab = topo.label_map()

    if cycle is not None:
        dirs = [lab[(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle))]
        sol = _closure_lengths(dirs)
        if sol is None:
            return RealizationWitness(RealizationStatus.INFEASIBLE, None, None)
        lengths = {e: Fraction(1) for e in edges}
        for i, L in enumerate(sol):
            a, b = cycle[i], cycle[(i + 1) % len(cycle)]
            lengths[(min(a, b), max(a, b))] = L
        g = _draw(topo, lengths)
        ok = check_embedding(g).ok
        status = RealizationStatus.REALIZED_EMBEDDED if ok else RealizationStatus.REALIZED_SELF_CROSSING
        return RealizationWitness(status, lengths, g)

    # trees close trivially; hunt the deterministic length grid for an embedding
    trials = 0
    for combo in itertools.product((1, 2, 3, 4, 5), repeat=len(edges)):
        trials += 1
        if trials > GRID_TRIAL_CAP:
            return RealizationWitness(RealizationStatus.UNRESOLVED, None, None, trials - 1)
        lengths = {e: Fraction(c) for e, c in zip(edges, combo)}
        g = _draw(topo, lengths)
        if check_embedding(g).ok:
            return RealizationWitness(RealizationStatus.REALIZED_EMBEDDED, lengths, g, trials)
    return RealizationWitness(RealizationStatus.UNRESOLVED, None, None, trials)


@dataclass(frozen=True)
class Census:
    n: int
    topologies: Tuple[DirectedTopology, ...]
    statuses: Tuple[RealizationStatus, ...]
    max_vertices: int
    witnesses: Tuple[DirectedTopology, ...]
    unresolved: Tuple[DirectedTopology, ...]


def run_census(n: int) -> Census:
    topos = enumerate_topologies(n)
    statuses = []
    best = -1
    witnesses: List[DirectedTopology] = []
    unresolved: List[DirectedTopology] = []
    for t in topos:
        w = realize(t)
        statuses.append(w.status)
        if w.status is RealizationStatus.UNRESOLVED:
            unresolved.append(t)
        if w.status is RealizationStatus.REALIZED_EMBEDDED:
            rep = check_minimality(w.graph)
            assert rep.worst_residual <= 1e-8, "drawn witness must be balanced"
            if t.vertex_count() > best:
                best = t.vertex_count()
                witnesses = [t]
            elif t.vertex_count() == best:
                witnesses.append(t)
    return Census(n, tuple(topos), tuple(statuses), best, tuple(witnesses), tuple(unresolved))


def max_vertices_bruteforce(n: int) -> Tuple[int, List[DirectedTopology]]:
    census = run_census(n)
    return census.max_vertices, list(census.witnesses)


def topology_of_graph(g: PlaneGraph) -> DirectedTopology:
    """Extract the combinatorial type of an exact drawn graph (for cross-checks)."""
    from .minimality import _rotation  # angular rotation orders

    rot_map = _rotation(g)
    ids = sorted(rot_map)
    index = {vid: i for i, vid in enumerate(ids)}
    rot = tuple(tuple(index[w] for w in rot_map[vid]) for vid in ids)
    topo = _make_topology(rot)
    assert topo is not None, "a drawn balanced graph always carries consistent labels"
    return topo
