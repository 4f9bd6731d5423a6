import pytest

from minimalnets.bounds import f3
from minimalnets.geometry import HexCoord, Vec2F
from minimalnets.graph import VertexKind, build_graph, check_embedding, degree_profile
from minimalnets.hn import (
    AngleCaseUnmatchedError,
    NotSimpleError,
    SimplicityViolationKind,
    base_h,
    build_hn,
    hn_vertex_count,
    is_simple,
    pad,
    pad_detailed,
)
from minimalnets.minimality import check_minimality, maximal_cycles

A = VertexKind.ATTACHING
I = VertexKind.INTERNAL


def test_base_cases():
    assert base_h(2).vertex_count() == 2
    assert base_h(6).vertex_count() == 12
    assert degree_profile(base_h(6)) == {1: 6, 3: 6}
    assert base_h(7).vertex_count() == 14
    with pytest.raises(ValueError):
        base_h(8)
    with pytest.raises(ValueError):
        base_h(1)


def test_base_trees_are_unique_maximizers():
    for n in (2, 3, 4, 5):
        g = base_h(n)
        assert g.vertex_count() == 2 * n - 2 == f3(n)


def test_vertex_count_closed_form():
    assert hn_vertex_count(6) == 12
    assert hn_vertex_count(7) == 14  # 6 + 6 + 2 + 0
    assert hn_vertex_count(11) == 30  # 6 + 6 + 10 + 8


def test_padding_counts():
    assert pad(base_h(2)).vertex_count() == 18
    assert pad(base_h(6)).vertex_count() == 36
    assert pad(base_h(7)).vertex_count() == 40


def test_padding_gap_bookkeeping():
    _, gaps = pad_detailed(base_h(6))
    assert all(g.vertices_added == 2 for g in gaps)
    assert all(g.vertices_added == g.angle_sixths + 3 for g in gaps)

    _, gaps2 = pad_detailed(base_h(2))
    assert [g.vertices_added for g in gaps2] == [4, 4]  # only the one-edge graph

    _, gaps7 = pad_detailed(base_h(7))
    assert sum(g.vertices_added for g in gaps7) == 13
    assert sorted(g.vertices_added for g in gaps7) == [1, 1, 2, 2, 2, 2, 3]


def test_build_hn_matches_formulas_to_30():
    for n in range(2, 31):
        g = build_hn(n)
        assert g.vertex_count() == hn_vertex_count(n) == f3(n)
    for n in range(8, 31):
        assert build_hn(n).vertex_count() == build_hn(n - 6).vertex_count() + 2 * n


def test_hn_examples_from_recursion():
    assert build_hn(14).vertex_count() == 46
    assert build_hn(20).vertex_count() == 86
    assert build_hn(9).vertex_count() == 22


def test_every_hn_is_minimal_embedded_simple():
    for n in range(2, 31):
        g = build_hn(n)
        rep = check_minimality(g)
        assert rep.ok and rep.worst_residual == 0.0, n
        assert check_embedding(g).ok, n
        assert is_simple(g).simple, n


def test_unique_maximal_cycle_with_n_outgoing():
    for n in range(6, 31):
        maxc = maximal_cycles(build_hn(n))
        assert len(maxc) == 1
        c = maxc[0]
        assert len(c) == 2 * n - 6
        assert len(c.outgoing) == n
        assert len(c.ingoing) == n - 6


def test_five_turn_path_fixture():
    # five consecutive hexagon sides drawn as a bare path
    pts = [(0, 0), (0, 2), (1, 3), (2, 2), (2, 0), (1, -1)]
    verts = [
        (i, HexCoord(*p), A if i in (0, 5) else I) for i, p in enumerate(pts)
    ]
    edges = [(i, i + 1) for i in range(5)]
    g = build_graph(verts, edges, mode="exact")
    rep = is_simple(g)
    assert not rep.simple
    assert rep.violation is SimplicityViolationKind.FIVE_TURN_PATH
    assert len(rep.detail) == 6
    with pytest.raises(NotSimpleError):
        pad(g)


def test_consecutive_ingoing_fixture():
    # U-shaped polygon: the two inner corners are adjacent right turns whose
    # third edges point into the bounded side
    poly = [(0, 0), (6, 0), (6, 6), (4, 6), (4, 2), (2, 2), (2, 6), (0, 6)]
    legs = [(-0.5, -0.5), (6.5, -0.5), (6.5, 6.5), (4.3, 6.5),
            (4.2, 1.0), (1.8, 1.0), (1.7, 6.5), (-0.5, 6.5)]
    verts = [(i, Vec2F(*p), I) for i, p in enumerate(poly)]
    verts += [(8 + i, Vec2F(*p), A) for i, p in enumerate(legs)]
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(i, 8 + i) for i in range(8)]
    g = build_graph(verts, edges, mode="float")
    assert check_embedding(g).ok
    rep = is_simple(g)
    assert not rep.simple
    assert rep.violation is SimplicityViolationKind.CONSECUTIVE_INGOING
    assert set(rep.detail) == {4, 5}


def test_multiple_max_cycles_not_simple():
    from .test_minimality import double_hexagon

    rep = is_simple(double_hexagon())
    assert not rep.simple
    assert rep.violation is SimplicityViolationKind.MULTIPLE_MAX_CYCLES


def test_plus_60_gap_case_rejected_off_the_one_edge_graph():
    # a one-edge graph is the only padding input allowed to hit the widest gap
    _, gaps = pad_detailed(base_h(2))
    assert {g.angle_sixths for g in gaps} == {1}
    for n in range(3, 12):
        _, gaps = pad_detailed(build_hn(n))
        assert all(g.angle_sixths in (-2, -1, 0) for g in gaps), n
