from __future__ import annotations

import json
from decimal import Decimal

import pytest

from pseudotri import harness as H
from pseudotri.enumerator import CountTable, stratify
from pseudotri.geom import make_almost_convex, make_convex
from pseudotri.ptgraph import InteriorSubset


def test_record_needs_witness_on_failure():
    rep = H.VerificationReport("x")
    assert rep.record("fine", True)
    with pytest.raises(ValueError):
        rep.record("broken", False)
    assert not rep.record("broken", False, {"a": 1})
    assert not rep.ok and [c.name for c in rep.failures] == ["broken"]


def test_report_json_round_trip():
    rep = H.VerificationReport("round trip")
    rep.record("a", True, detail="d")
    rep.record("b", False, [(1, 2 ** 80)])
    obj = json.loads(rep.dumps())
    assert obj["checks"][1]["witness"] == [["1", str(2 ** 80)]]
    back = H.VerificationReport.from_json(obj)
    assert back.to_json() == rep.to_json()


def test_text_has_no_timing_by_default():
    rep = H.single_chain_report(2)
    assert rep.timing is not None
    assert "elapsed" not in rep.to_text() and "timing" not in rep.to_json()
    assert "elapsed" in rep.to_text(timing=True)


def test_monotonicity_vacuous_on_convex():
    tbl = stratify(make_convex(6))
    assert H.check_monotonicity(tbl).ok and H.check_triple_inequality(tbl).ok


def test_broken_table_detected():
    tbl = stratify(make_almost_convex(4, (0, 2)))
    counts = dict(tbl.counts)
    counts[InteriorSubset.of((4,))] = 0
    bad = CountTable(tbl.n, tbl.interior, counts)
    rep = H.check_monotonicity(bad)
    assert not rep.ok and rep.failures[0].witness == [([4], 4, 0, tbl[()])]
    counts = dict(tbl.counts)
    counts[InteriorSubset.of((4, 5))] = 10 ** 6
    assert not H.check_triple_inequality(CountTable(tbl.n, tbl.interior, counts)).ok


def test_incomplete_table_rejected():
    tbl = stratify(make_almost_convex(4, (0,)))
    del tbl.counts[InteriorSubset.of(())]
    with pytest.raises(ValueError):
        H.check_monotonicity(tbl)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_single_interior_catalan(n):
    sets = H.single_interior_sets(n)
    assert len(sets) == 2
    for ps in sets:
        assert H.check_single_interior_catalan(ps).ok


def test_single_interior_rejects_other_sets():
    with pytest.raises(ValueError):
        H.check_single_interior_catalan(make_convex(5))
    with pytest.raises(ValueError):
        H.check_single_interior_catalan(make_almost_convex(4, (0, 1)))


def test_random_sets_are_deterministic():
    a = [ps.points for ps in H.random_instances(6, 7, seed=3)]
    b = [ps.points for ps in H.random_instances(6, 7, seed=3)]
    c = [ps.points for ps in H.random_instances(6, 7, seed=4)]
    assert a == b != c
    assert [len(p) for p in a] == [4, 5, 6, 7, 4, 5]


def test_small_sweep_passes():
    rep = H.conjecture_sweep(max_n=6, n_random=5, random_max_n=6)
    assert rep.ok and len(rep.checks) > 10


def test_unknown_scope():
    with pytest.raises(ValueError):
        H.cross_validate("nonsense")
    assert H.cross_validate("single-chain:2").ok


@pytest.mark.parametrize("scope", ["almost-convex:6", "double-chain:1", "bijection:3",
                                   "reconstruction:4", "identities:8"])
def test_scopes_pass(scope):
    rep = H.cross_validate(scope)
    assert rep.ok, rep.to_text()


def test_ratio_rows():
    row = H.ratio_row("single-chain", 3)
    assert (row.ppt, row.t, row.exponent) == (67, 5, 3)
    assert float(Decimal(row.ratio) ** 3) == pytest.approx(67 / 5, rel=1e-5)
    assert row.limit == "2.000000"
    dc = H.ratio_row("double-chain", 2)
    assert (dc.ppt, dc.t, dc.exponent) == (1476, 80, 4)
    with pytest.raises(ValueError):
        H.ratio_row("pentagon", 2)


def test_double_circle_ratio_approaches_seven_thirds():
    rows = H.ratio_table("double-circle", (20, 40, 60))
    vals = [float(r.ratio) for r in rows]
    assert vals == sorted(vals) or vals == sorted(vals, reverse=True)
    assert abs(vals[-1] - 7 / 3) < abs(vals[0] - 7 / 3)


@pytest.mark.xfail(strict=True, reason="double-chain ratio does not approach 3/2")
def test_double_chain_ratio_limit():
    # the ratio sits near 1.56 at l=m=20 and is still rising
    row = H.ratio_row("double-chain", 20)
    assert abs(float(row.ratio) - 1.5) < 0.01
