import json

import pytest

from minimalnets.geometry import HexCoord, IntersectionKind, Vec2F
from minimalnets.graph import (
    GraphValidationError,
    VertexKind,
    build_graph,
    check_embedding,
    degree_profile,
    graph_from_json,
    graph_to_json,
)
from minimalnets.hn import build_hn

A = VertexKind.ATTACHING
I = VertexKind.INTERNAL


def one_edge():
    return build_graph(
        [(0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A)], [(0, 1)], mode="exact"
    )


def test_one_edge_graph_builds():
    g = one_edge()
    assert g.vertex_count() == 2
    assert degree_profile(g) == {1: 2}


def test_attaching_degree_violation():
    with pytest.raises(GraphValidationError) as e:
        build_graph(
            [(0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A), (2, HexCoord(1, 3), A)],
            [(0, 1), (1, 2)],
            mode="exact",
        )
    assert "AttachingDegreeViolation" in e.value.codes()


def test_dangling_edge():
    with pytest.raises(GraphValidationError) as e:
        build_graph([(0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A)], [(0, 7)], mode="exact")
    assert "DanglingEdge" in e.value.codes()


def test_duplicate_id_and_edge_and_self_loop():
    with pytest.raises(GraphValidationError) as e:
        build_graph(
            [(0, HexCoord(0, 0), A), (0, HexCoord(0, 2), A)], [(0, 0)], mode="exact"
        )
    codes = e.value.codes()
    assert "DuplicateId" in codes and "SelfLoop" in codes


def test_disconnected_rejected_unless_forest():
    verts = [
        (0, HexCoord(0, 0), A), (1, HexCoord(0, 2), A),
        (2, HexCoord(4, 0), A), (3, HexCoord(4, 2), A),
    ]
    edges = [(0, 1), (2, 3)]
    with pytest.raises(GraphValidationError) as e:
        build_graph(verts, edges, mode="exact")
    assert "Disconnected" in e.value.codes()
    g = build_graph(verts, edges, mode="exact", forest=True)
    assert g.vertex_count() == 4


def test_degree_profile_of_hn():
    assert degree_profile(build_hn(6)) == {1: 6, 3: 6}
    assert degree_profile(build_hn(7)) == {1: 7, 3: 7}


def test_handshake_on_hn_family():
    for n in range(2, 21):
        g = build_hn(n)
        prof = degree_profile(g)
        assert sum(d * c for d, c in prof.items()) == 2 * len(g.edges)
        # 3-regular bookkeeping: legs + 3 * internal = 2E
        assert prof.get(1, 0) + 3 * prof.get(3, 0) == 2 * len(g.edges)


def test_embedding_ok_on_one_edge_and_h6():
    assert check_embedding(one_edge()).ok
    assert check_embedding(build_hn(6)).ok


def test_embedding_catches_crossing():
    # two crossing diagonals of the unit square, tied together at their tips
    g = build_graph(
        [
            (0, Vec2F(0, 0), A), (1, Vec2F(1, 1), I),
            (2, Vec2F(0, 1), A), (3, Vec2F(1, 0), I),
            (4, Vec2F(2, 1), A), (5, Vec2F(2, 0), A),
        ],
        [(0, 1), (2, 3), (1, 3), (1, 4), (3, 5)],
        mode="float",
    )
    rep = check_embedding(g)
    assert not rep.ok
    assert any(
        kind is IntersectionKind.PROPER_CROSSING and {e1, e2} == {(0, 1), (2, 3)}
        for e1, e2, kind in rep.edge_conflicts
    )


def test_embedding_catches_vertex_on_foreign_edge():
    g = build_graph(
        [
            (0, Vec2F(0, 0), A), (1, Vec2F(2, 0), I),
            (2, Vec2F(1, 0), A), (3, Vec2F(1, 1), I),
        ],
        [(0, 1), (2, 3), (1, 3)],
        mode="float",
    )
    rep = check_embedding(g)
    assert not rep.ok
    assert any(v == 2 and e == (0, 1) for v, e in rep.vertex_on_edge)


def test_json_round_trip_is_bit_exact_for_exact_mode():
    for n in (2, 6, 7, 12):
        g = build_hn(n)
        s = graph_to_json(g)
        assert graph_to_json(graph_from_json(s)) == s
        obj = json.loads(s)
        assert obj["mode"] == "exact"
        ids = [v["id"] for v in obj["vertices"]]
        assert ids == sorted(ids)
        assert obj["edges"] == sorted(map(list, g.edges))


def test_json_round_trip_float_mode():
    g = build_graph(
        [(0, Vec2F(0.1, -0.25), A), (1, Vec2F(1.0, 2.0), A)], [(0, 1)], mode="float"
    )
    s = graph_to_json(g)
    assert graph_to_json(graph_from_json(s)) == s
