from __future__ import annotations

import warnings

import pytest

from pseudotri.counters import catalan
from pseudotri.enumerator import (DEFAULT_CAP, CountTable, convex_triangulations,
                                  enumerate_convex_TW, enumerate_pt, leaves, stratify,
                                  stratify_by_tip)
from pseudotri.geom import make_almost_convex, make_convex, make_double_chain, make_single_chain
from pseudotri.ptgraph import InteriorSubset


def test_enumerate_pt_distinct_and_valid():
    ps = make_double_chain(1, 1)
    pts = list(enumerate_pt(ps))
    assert len(pts) == 74
    assert len({t.edges for t in pts}) == 74
    assert sum(t.is_pointed for t in pts) == len(list(enumerate_pt(ps, pointed_only=True)))


def test_enumeration_order_is_stable():
    ps = make_single_chain(3)
    a = [t.sorted_edges() for t in enumerate_pt(ps)]
    b = [t.sorted_edges() for t in enumerate_pt(ps)]
    assert a == b


def test_stratify_matches_validated_enumeration():
    ps = make_almost_convex(4, (0, 1, 2))
    tbl = stratify(ps)
    by_sig = {}
    for t in enumerate_pt(ps):
        by_sig[t.signature] = by_sig.get(t.signature, 0) + 1
    assert {w: c for w, c in tbl.counts.items() if c} == by_sig
    assert len(tbl.counts) == 8


def test_stratify_pointed_only():
    ps = make_single_chain(3)
    full = stratify(ps)
    pointed = stratify(ps, pointed_only=True)
    assert pointed.total == full[(1, 2, 3)] == 67


def test_stratify_by_tip_needs_single_chain():
    with pytest.raises(ValueError):
        stratify_by_tip(make_convex(5))


def test_workers_give_identical_results():
    ps = make_single_chain(4)
    assert leaves(ps, workers=2)[1] == leaves(ps)[1]
    assert stratify(ps, workers=3).counts == stratify(ps).counts


def test_cap():
    ps = make_convex(DEFAULT_CAP + 1)
    with pytest.raises(ValueError):
        stratify(ps)
    with pytest.warns(UserWarning):
        tbl = stratify(ps, pointed_only=True, cap=DEFAULT_CAP + 1)
    assert tbl.total == catalan(DEFAULT_CAP - 1)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        stratify(make_convex(5), cap=DEFAULT_CAP)


def test_count_table_json_round_trip():
    tbl = stratify(make_double_chain(1, 0))
    back = CountTable.loads(tbl.dumps())
    assert back.counts == tbl.counts and back.interior == tbl.interior
    obj = tbl.to_json()
    assert all(isinstance(row["count"], str) for row in obj["counts"])
    obj["total"] = "1"
    with pytest.raises(ValueError):
        CountTable.from_json(obj)


def test_count_table_merge_and_lookup():
    a = CountTable.empty(5, (3, 4))
    a.counts[InteriorSubset((3,))] = 2
    b = CountTable.empty(5, (3, 4))
    b.counts[InteriorSubset((3,))] = 5
    m = a.merge(b)
    assert m[(3,)] == 7 and m[[3]] == 7 and m.total == 7
    assert [w.members for w in m.keys()] == [(), (3,), (4,), (3, 4)]
    with pytest.raises(ValueError):
        a.merge(CountTable.empty(5, (3,)))


@pytest.mark.parametrize("k", range(2, 9))
def test_convex_triangulations(k):
    tris = list(convex_triangulations(tuple(range(k))))
    assert len(tris) == catalan(max(k - 2, 0))
    assert len(set(tris)) == len(tris)
    assert all(len(t) == max(k - 3, 0) for t in tris)


def test_enumerate_convex_TW():
    assert enumerate_convex_TW(3, (1, 2)) == 9
    assert enumerate_convex_TW(4, ()) == catalan(4)
    assert enumerate_convex_TW(4, (1, 2, 3, 4)) == catalan(5)
    with pytest.raises(ValueError):
        enumerate_convex_TW(2, (3,))
