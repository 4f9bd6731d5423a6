import math

import pytest
from hypothesis import given, strategies as st

from minimalnets.geometry import (
    STEPS,
    Direction6,
    DirectionError,
    HexCoord,
    IntersectionKind,
    Segment,
    Vec2F,
    hex_to_euclid,
    lattice_step,
    legal_directions,
    segment_relation,
    segment_relation_exact,
    step_direction,
)


def seg(a, b, c, d):
    return Segment(Vec2F(a, b), Vec2F(c, d))


def test_hex_to_euclid_examples():
    assert hex_to_euclid(HexCoord(0, 0)) == Vec2F(0.0, 0.0)
    assert hex_to_euclid(HexCoord(0, 2)) == Vec2F(0.0, 1.0)
    p = hex_to_euclid(HexCoord(1, -1))
    assert p.x == pytest.approx(0.8660254, abs=1e-7)
    assert p.y == -0.5
    assert math.hypot(p.x, p.y) == pytest.approx(1.0, abs=1e-15)


def test_every_step_has_unit_length():
    # (sqrt3/2)^2 + (1/2)^2 = 1 and (0, 1) respectively
    for k in range(6):
        u = Direction6(k).unit_euclid()
        assert u.x * u.x + u.y * u.y == pytest.approx(1.0, abs=1e-15)


def test_opposite_directions_are_exact_negatives():
    for k in range(6):
        a = Direction6(k).step()
        b = Direction6(k + 3).step()
        assert a.m + b.m == 0 and a.n + b.n == 0


def test_direction_triples_sum_to_zero_exactly():
    for k in range(6):
        ms = sum(Direction6(k + r).step().m for r in (0, 2, 4))
        ns = sum(Direction6(k + r).step().n for r in (0, 2, 4))
        assert (ms, ns) == (0, 0)


def test_lattice_step_examples():
    assert lattice_step(HexCoord(0, 0), Direction6(1)) == HexCoord(0, 2)
    assert lattice_step(HexCoord(0, 2), Direction6(0)) == HexCoord(1, 3)
    assert lattice_step(HexCoord(0, 0), Direction6(5)) == HexCoord(1, -1)
    with pytest.raises(DirectionError):
        lattice_step(HexCoord(0, 0), Direction6(0))
    with pytest.raises(DirectionError):
        lattice_step(HexCoord(0, 2), Direction6(5))


def test_sublattice_legality_alternates():
    a = HexCoord(0, 0)
    assert {d.k for d in legal_directions(a)} == {1, 3, 5}
    for d in legal_directions(a):
        b = lattice_step(a, d)
        assert {x.k for x in legal_directions(b)} == {0, 2, 4}


def test_honeycomb_constructor_rejects_off_lattice():
    HexCoord.lattice(0, 0)
    HexCoord.lattice(0, 2)
    with pytest.raises(ValueError):
        HexCoord.lattice(1, 1)  # hexagon center
    with pytest.raises(ValueError):
        HexCoord.lattice(0, 1)  # odd parity


def test_step_direction_decomposition():
    d, s = step_direction(HexCoord(3, 3))
    assert d.k == 0 and s == 3
    d, s = step_direction(HexCoord(0, -4))
    assert d.k == 4 and s == 2
    with pytest.raises(ValueError):
        step_direction(HexCoord(1, 3))


def test_segment_relation_examples():
    assert segment_relation(seg(0, 0, 1, 0), seg(0, 1, 1, 1)).kind is IntersectionKind.DISJOINT
    rel = segment_relation(seg(0, 0, 1, 1), seg(0, 1, 1, 0))
    assert rel.kind is IntersectionKind.PROPER_CROSSING
    assert rel.point.x == pytest.approx(0.5) and rel.point.y == pytest.approx(0.5)
    assert (
        segment_relation(seg(0, 0, 1, 0), seg(1, 0, 1, 1)).kind
        is IntersectionKind.SHARED_ENDPOINT
    )


def test_segment_relation_overlap_and_touch():
    assert segment_relation(seg(0, 0, 2, 0), seg(1, 0, 3, 0)).kind is IntersectionKind.OVERLAP
    assert segment_relation(seg(0, 0, 2, 0), seg(0, 0, 1, 0)).kind is IntersectionKind.OVERLAP
    # collinear but pointing apart from the shared endpoint
    assert (
        segment_relation(seg(1, 0, 2, 0), seg(1, 0, 0, 0)).kind
        is IntersectionKind.SHARED_ENDPOINT
    )
    # T-junction: an endpoint in the other segment's interior
    assert (
        segment_relation(seg(0, 0, 2, 0), seg(1, 0, 1, 1)).kind
        is IntersectionKind.ENDPOINT_TOUCH
    )
    assert segment_relation(seg(0, 0, 2, 0), seg(3, 0, 4, 0)).kind is IntersectionKind.DISJOINT


coords = st.integers(min_value=-6, max_value=6)


@given(coords, coords, coords, coords, coords, coords, coords, coords)
def test_segment_relation_is_symmetric(ax, ay, bx, by, cx, cy, dx, dy):
    if (ax, ay) == (bx, by) or (cx, cy) == (dx, dy):
        return
    s1 = seg(ax, ay, bx, by)
    s2 = seg(cx, cy, dx, dy)
    assert segment_relation(s1, s2).kind is segment_relation(s2, s1).kind


@given(coords, coords, coords, coords, coords, coords, coords, coords)
def test_exact_relation_matches_float_on_integer_inputs(ax, ay, bx, by, cx, cy, dx, dy):
    if (ax, ay) == (bx, by) or (cx, cy) == (dx, dy):
        return
    exact = segment_relation_exact((ax, ay), (bx, by), (cx, cy), (dx, dy))
    approx = segment_relation(seg(ax, ay, bx, by), seg(cx, cy, dx, dy), tol=0.0)
    assert exact.kind is approx.kind


def test_zero_length_segment_rejected():
    with pytest.raises(ValueError):
        Segment(Vec2F(1, 1), Vec2F(1, 1))


def test_nonfinite_vec_rejected():
    with pytest.raises(ValueError):
        Vec2F(float("nan"), 0.0)
