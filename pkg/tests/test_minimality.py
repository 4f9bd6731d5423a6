import math

import pytest

from minimalnets.geometry import HexCoord, Vec2F
from minimalnets.graph import VertexKind, build_graph, check_embedding, degree_profile
from minimalnets.hn import build_hn
from minimalnets.minimality import (
    StructureKind,
    attach_extension,
    bounded_faces,
    check_minimality,
    classify_structure,
    criticality_residual,
    cycle_rank,
    find_cycles,
    maximal_cycles,
    point_in_polygon,
)

A = VertexKind.ATTACHING
I = VertexKind.INTERNAL


def displaced_h6():
    g = build_hn(6)
    verts = []
    for v in g.vertices:
        p = g.euclid(v.id)
        if v.id == 0:
            p = Vec2F(p.x + 0.1, p.y)
        verts.append((v.id, p, v.kind))
    return build_graph(verts, g.edges, mode="float")


def test_h6_minimal_exact_zero():
    rep = check_minimality(build_hn(6))
    assert rep.ok and rep.worst_residual == 0.0
    assert all(r == 0.0 for r in rep.residuals.values())


def test_one_edge_vacuously_minimal():
    g = build_graph([(0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A)], [(0, 1)], mode="exact")
    rep = check_minimality(g)
    assert rep.ok and rep.residuals == {}


def test_displaced_vertex_residual_matches_hand_computation():
    g = displaced_h6()
    rep = check_minimality(g, tol=1e-8)
    assert not rep.ok
    assert rep.worst_residual > 0.05

    # independent oracle: the unit-vector sums recomputed straight from coordinates
    for vid in g.internal_ids():
        sx = sy = 0.0
        p = g.euclid(vid)
        for w in g.neighbors(vid):
            q = g.euclid(w)
            d = math.hypot(q.x - p.x, q.y - p.y)
            sx += (q.x - p.x) / d
            sy += (q.y - p.y) / d
        assert rep.residuals[vid] == pytest.approx(math.hypot(sx, sy), abs=1e-12)


def test_find_cycles_tree_and_h6():
    assert find_cycles(build_hn(5)) == []
    cycles = find_cycles(build_hn(6))
    assert len(cycles) == 1 and len(cycles[0]) == 6
    assert len(cycles[0].outgoing) == 6 and len(cycles[0].ingoing) == 0
    assert cycles[0].interior_area > 0


def test_h12_cycle_set_includes_outer_ring():
    cycles = find_cycles(build_hn(12))
    assert any(len(c) == 18 for c in cycles)
    assert all(c.gauss_bonnet_defect() == 6 for c in cycles)


def test_maximal_cycles_tree_hn_and_double_hexagon():
    assert maximal_cycles(build_hn(4)) == []
    for n in (6, 9, 12, 17):
        maxc = maximal_cycles(build_hn(n))
        assert len(maxc) == 1 and len(maxc[0]) == 2 * n - 6

    g = double_hexagon()
    maxc = maximal_cycles(g)
    assert len(maxc) == 2 and all(len(c) == 6 for c in maxc)

    # brute-force oracle: maximal = not contained in any other cycle's interior
    all_cycles = find_cycles(g)
    polys = {c.vertex_ids: [(g.vertex(v).pos.m, g.vertex(v).pos.n) for v in c.vertex_ids]
             for c in all_cycles}
    expected = []
    for c in all_cycles:
        contained = False
        for other in all_cycles:
            if other.vertex_ids == c.vertex_ids:
                continue
            probe = next(v for v in c.vertex_ids if v not in other.vertex_ids)
            pos = g.vertex(probe).pos
            if point_in_polygon((pos.m, pos.n), polys[other.vertex_ids]) == "inside":
                contained = True
        if not contained:
            expected.append(c.vertex_ids)
    assert sorted(expected) == sorted(c.vertex_ids for c in maxc)


def test_classify_structure():
    assert classify_structure(build_hn(5)).kind is StructureKind.TREE
    assert classify_structure(build_hn(6)).kind is StructureKind.ONE_MAX_CYCLE
    assert classify_structure(double_hexagon()).kind is StructureKind.MULTI_MAX_CYCLE


def test_gauss_bonnet_on_all_faces_up_to_30():
    for n in range(6, 31):
        for face in bounded_faces(build_hn(n)):
            assert face.gauss_bonnet_defect() == 6


def test_cycle_turning_sums_to_plus_360():
    # walking with the bounded side on the left: four +60 turns more than -60 ones
    for n in (6, 8, 13):
        g = build_hn(n)
        for c in find_cycles(g):
            total = 0
            ids = c.vertex_ids
            for i, v in enumerate(ids):
                prev, nxt = ids[i - 1], ids[(i + 1) % len(ids)]
                pa, pb, pc = (g.vertex(x).pos for x in (prev, v, nxt))
                cross = (pb.m - pa.m) * (pc.n - pb.n) - (pb.n - pa.n) * (pc.m - pb.m)
                total += 1 if cross > 0 else -1
            assert total == 6  # 6 * 60 degrees = +360


def test_nontree_minimal_graph_has_at_least_six_attaching_points():
    for n in range(2, 21):
        g = build_hn(n)
        if classify_structure(g).kind is not StructureKind.TREE:
            assert len(g.attaching_ids()) >= 6


def test_attach_extension_grows_by_one_leg():
    for n in (2, 5, 6, 11):
        g = build_hn(n)
        for aid in g.attaching_ids():
            g2 = attach_extension(g, aid)
            assert len(g2.attaching_ids()) == n + 1
            assert g2.vertex_count() == g.vertex_count() + 2
            assert check_minimality(g2).ok
            assert check_embedding(g2).ok


def test_cycle_rank_matches_ring_structure():
    assert cycle_rank(build_hn(5)) == 0
    assert cycle_rank(build_hn(6)) == 1
    assert cycle_rank(build_hn(12)) == 7
    assert cycle_rank(build_hn(18)) == 19
