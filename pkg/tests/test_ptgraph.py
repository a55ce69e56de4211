from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from pseudotri.enumerator import enumerate_pt
from pseudotri.geom import PointSet, make_convex, make_single_chain
from pseudotri.ptgraph import (CrossingEdges, DisconnectedGraph, FaceNotPseudoTriangle,
                               InteriorSubset, IsolatedOrDegreeOneVertex, MissingHullEdge,
                               PlaneGraph, ValidationError, edge_key, faces_of, format_edges,
                               is_pointed, is_pseudo_triangulation, parse_edges, read_edges,
                               tip_signature, validate)

SQUARE_PLUS = PointSet.from_points([(0, 0), (10, 0), (10, 10), (0, 10), (4, 3)])
HULL4 = [(0, 1), (1, 2), (2, 3), (0, 3)]


def test_fan_triangulation_of_convex_polygon():
    ps = make_convex(6)
    edges = ps.hull_edges() + [(0, k) for k in range(2, 5)]
    t = validate(ps, edges)
    assert len(t.faces) == 4 and t.is_pointed
    assert all(len(f.boundary) == 3 for f in t.faces)


def test_star_is_a_triangulation_with_non_pointed_centre():
    t = validate(SQUARE_PLUS, HULL4 + [(k, 4) for k in range(4)])
    assert not t.pointed[4] and t.signature == InteriorSubset()
    assert len(t.edges) == 2 * 5 - 3 + 1


def test_pointed_pseudo_triangulations_have_a_four_vertex_face():
    ppts = list(enumerate_pt(SQUARE_PLUS, pointed_only=True))
    assert ppts
    for t in ppts:
        assert t.is_pointed and t.signature == InteriorSubset((4,))
        assert len(t.edges) == 2 * 5 - 3
        assert sorted(len(f.boundary) for f in t.faces) == [3, 3, 4]
        quad = next(f for f in t.faces if len(f.boundary) == 4)
        assert 4 not in quad.corners


def test_validation_errors():
    with pytest.raises(MissingHullEdge):
        validate(SQUARE_PLUS, HULL4[:-1] + [(k, 4) for k in range(4)])
    with pytest.raises(CrossingEdges):
        validate(SQUARE_PLUS, HULL4 + [(0, 2), (1, 3), (4, 0), (4, 1)])
    with pytest.raises(IsolatedOrDegreeOneVertex):
        validate(SQUARE_PLUS, HULL4 + [(0, 2)])
    with pytest.raises(FaceNotPseudoTriangle):
        validate(make_convex(5), make_convex(5).hull_edges() + [(0, 2)])
    inner = PointSet.from_points([(0, 0), (30, 0), (30, 30), (0, 30), (10, 9), (20, 11), (12, 21)])
    with pytest.raises(DisconnectedGraph):
        validate(inner, HULL4 + [(4, 5), (5, 6), (4, 6)])
    with pytest.raises(ValidationError):
        validate(SQUARE_PLUS, HULL4 + [(2, 2)])
    assert not is_pseudo_triangulation(SQUARE_PLUS, HULL4)


def test_validation_error_witness():
    with pytest.raises(CrossingEdges) as err:
        validate(SQUARE_PLUS, HULL4 + [(0, 2), (1, 3), (4, 0), (4, 1)])
    assert set(err.value.witness) == {(0, 2), (1, 3)}


def test_is_pointed_and_degree():
    g = PlaneGraph.of(SQUARE_PLUS, HULL4 + [(k, 4) for k in range(4)])
    assert not is_pointed(g, 4) and is_pointed(g, 0)
    assert g.degree(4) == 4
    with pytest.raises(IsolatedOrDegreeOneVertex):
        is_pointed(PlaneGraph.of(SQUARE_PLUS, HULL4 + [(0, 4)]), 4)


def test_faces_ccw():
    g = PlaneGraph.of(SQUARE_PLUS, HULL4 + [(k, 4) for k in range(4)])
    assert len(faces_of(g)) == 4


@given(st.sets(st.integers(0, 20), max_size=8))
def test_interior_subset_mask_round_trip(items):
    w = InteriorSubset.of(items)
    assert InteriorSubset.from_mask(w.mask) == w
    assert list(w) == sorted(items) and len(w) == len(items)


def test_interior_subset_str():
    assert str(InteriorSubset.of([3, 1])) == "{1,3}"
    assert str(InteriorSubset()) == "{}"


def test_edge_text_round_trip(tmp_path):
    edges = [(3, 1), (0, 2)]
    text = format_edges(edges)
    assert text == "0 2\n1 3\n"
    assert parse_edges("# x\n" + text) == [(0, 2), (1, 3)]
    (tmp_path / "e.txt").write_text(text)
    assert read_edges(tmp_path / "e.txt") == [(0, 2), (1, 3)]
    with pytest.raises(ValueError):
        parse_edges("2 1\n")


def test_tip_signature():
    ps = make_single_chain(2)
    p = ps.tip
    edges = ps.hull_edges() + [(0, 1), (1, 2), (2, 3), (1, p), (1, 3)]
    t = validate(ps, edges)
    assert tip_signature(t) == InteriorSubset((1,))
    assert edge_key(4, 1) == (1, 4)
