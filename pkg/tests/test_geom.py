from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from pseudotri.geom import (DegenerateInput, FamilySpec, Orientation, PointSet, convex_hull,
                            find_collinear, make_almost_convex, make_convex, make_double_chain,
                            make_family, make_single_chain, orient, orientation, parse_points,
                            read_points, segments_cross, validate_closeness, write_points,
                            format_points)


def test_orient_signs():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 0), (0, -1)) == -1
    assert orient((0, 0), (1, 1), (2, 2)) == 0
    assert orientation((0, 0), (1, 0), (0, 1)) is Orientation.LEFT


def test_orient_exact_on_huge_coordinates():
    big = 10 ** 40
    assert orient((0, 0), (big, big + 1), (big - 1, big)) == 1


@given(st.tuples(*[st.integers(-50, 50)] * 6))
def test_orient_antisymmetric(c):
    a, b, p = c[0:2], c[2:4], c[4:6]
    assert orient(a, b, p) == -orient(b, a, p) == orient(b, p, a)


def test_segments_cross_shared_endpoint_is_not_a_crossing():
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_cross((0, 0), (2, 2), (2, 2), (3, 0))
    assert not segments_cross((0, 0), (1, 0), (0, 1), (1, 2))


def test_convex_hull_counter_clockwise():
    pts = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]
    hull = convex_hull(pts)
    assert sorted(hull) == [0, 1, 2, 3]
    for k in range(len(hull)):
        a, b, c = (pts[hull[(k + j) % 4]] for j in range(3))
        assert orient(a, b, c) == 1


def test_degenerate_input_carries_triple():
    with pytest.raises(DegenerateInput) as err:
        PointSet.from_points([(0, 0), (1, 1), (2, 2), (0, 5)])
    assert set(err.value.triple) == {0, 1, 2}
    with pytest.raises(DegenerateInput):
        PointSet.from_points([(0, 0), (0, 0), (1, 3)])
    with pytest.raises(DegenerateInput):
        PointSet.from_points([(0, 0), (1, 3)])


def test_convex_family():
    ps = make_convex(7)
    assert ps.interior == () and len(ps.hull) == 7
    with pytest.raises(ValueError):
        make_convex(2)


@pytest.mark.parametrize("l", range(0, 9))
def test_single_chain_shape(l):
    ps = make_single_chain(l)
    assert ps.n == l + 3
    assert sorted(ps.hull) == sorted({0, l + 1, l + 2})
    assert ps.interior == tuple(range(1, l + 1))
    assert ps.tip == l + 2 and ps.chain_length == l
    pts = ps.points
    # the tip sees every chain edge from the same side, the chain is reflex towards it
    for k in range(l + 1):
        assert orient(pts[k], pts[k + 1], pts[l + 2]) > 0
    for k in range(1, l + 1):
        assert orient(pts[k - 1], pts[k], pts[k + 1]) < 0


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5))
def test_double_chain_shape(l, m):
    ps = make_double_chain(l, m)
    assert ps.n == l + m + 4
    assert set(ps.hull) == {0, l + 1, l + 2, l + m + 3}
    assert len(ps.interior) == l + m
    assert ps.family == FamilySpec("double-chain", (l, m))


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 7).flatmap(lambda v: st.tuples(st.just(v), st.sets(st.integers(0, v - 1)))))
def test_almost_convex_closeness(vh):
    v, hosts = vh
    ps = make_almost_convex(v, hosts)
    hosts = sorted(hosts)
    assert len(ps.hull) == v and ps.interior == tuple(range(v, v + len(hosts)))
    for k, h in enumerate(hosts):
        assert validate_closeness(ps, v + k, (h, (h + 1) % v))


def test_closeness_fails_for_a_deep_point():
    pts = [(0, 0), (100, 0), (100, 100), (0, 100), (50, 1), (51, 60)]
    assert validate_closeness(pts, 4, (0, 1))
    assert not validate_closeness(pts, 5, (0, 1))


def test_almost_convex_rejects_bad_hosts():
    with pytest.raises(ValueError):
        make_almost_convex(4, (0, 0))
    with pytest.raises(ValueError):
        make_almost_convex(4, (4,))
    with pytest.raises(ValueError):
        make_almost_convex(2)


@pytest.mark.parametrize("spec", [FamilySpec("convex", (5,)), FamilySpec("single-chain", (3,)),
                                  FamilySpec("double-chain", (1, 2)),
                                  FamilySpec("almost-convex", (5, (0, 2)))])
def test_point_format_round_trip(spec, tmp_path):
    ps = make_family(spec)
    back = parse_points(format_points(ps))
    assert back == ps
    assert back.family == spec
    write_points(ps, tmp_path / "p.txt")
    assert read_points(tmp_path / "p.txt") == ps


def test_parse_points_errors():
    with pytest.raises(ValueError):
        parse_points("")
    with pytest.raises(ValueError):
        parse_points("3\n0 0\n1 0\n")
    assert parse_points("# a comment\n3\n0 0\n4 0\n0 3\n").family is None


def test_unknown_family_kind():
    with pytest.raises(ValueError):
        FamilySpec("spiral", (3,))


def test_find_collinear():
    assert find_collinear([(0, 0), (1, 2), (5, 1)]) is None
    assert find_collinear([(0, 0), (1, 2), (5, 1), (2, 4)]) == (0, 1, 3)
