"""Smoke tests for the python bindings against the anchor values."""

from fractions import Fraction

import pytest

import crossgeo as cg

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIVE_TWO = "X(1,5,2,4) X(3,9,4,8) X(5,1,6,10) X(9,7,10,6) X(7,3,8,2)"


def test_parse_and_writhe():
    d = cg.parse_pd(TREFOIL)
    assert d.crossings == 3
    assert d.writhe == 3
    assert d.mirror().writhe == -3
    assert cg.is_alternating(d) and cg.is_reduced(d)


def test_parse_errors():
    with pytest.raises(cg.CrossgeoError):
        cg.parse_pd("X(1,4,2,5) X(3,6,4,1)")


def test_states_and_surfaces():
    d = cg.parse_pd(TREFOIL)
    basics = cg.states(d, basic_only=True)
    assert len(basics) == 2
    assert {(s["e"], s["b1"], s["orientable"]) for s in basics} == {(0, 2, True), (-6, 1, False)}

    f = cg.parse_pd(FIVE_TWO)
    assert len(cg.states(f, basic_only=True)) == 3
    sb = cg.state_surface(f, "BBBBB")
    assert sb["e"] == 0 and sb["b1"] == 2 and sb["orientable"]


def test_signatures():
    assert cg.goeritz_signature(cg.parse_pd(TREFOIL)) == -2
    assert cg.goeritz_signature(cg.torus_diagram(4, 3)) == -6
    assert cg.traczyk_signature(cg.parse_pd(FIVE_TWO)) == 2
    assert cg.pretzel_gap_signature(5, 1) == 2
    assert cg.goeritz_signature(cg.pretzel_diagram([-3, 3, 3])) == 0


def test_geography_and_gamma():
    d = cg.parse_pd(TREFOIL)
    geo = cg.alternating_geography(d)
    assert geo["generators"] == [(-6, 1), (-2, 3), (2, 3)]
    assert geo["gamma3"] == 1
    plus, minus = cg.gamma(-6, 1, -2)
    assert (plus, minus) == (Fraction(2), Fraction(0))
    assert cg.oss_sg_bounds(-6, -2) == (0, 2)


def test_turaev():
    assert cg.turaev_genus_diagram(cg.parse_pd(TREFOIL)) == 0
    assert cg.turaev_genus_diagram(cg.pretzel_diagram([-3, 3, 5])) == 1


def test_pinch():
    out = cg.pinch_surfaces(4, 3)
    assert out["f3"] == {"e": -12, "b1": 2, "orientable": False}
    assert out["f4"] == {"e": -10, "b1": 1, "orientable": False}
    assert out["sequence"] == [(4, 3), (2, 1), (0, 1)]


def test_candidate_table():
    rows = cg.candidate_table(5, 0)
    assert len(rows) == 17
    by_name = {r["system"]: r for r in rows}
    assert by_name["III_3"]["e"] == Fraction(16)
    assert by_name["III_3"]["gamma_plus"] == Fraction(0)
    assert by_name["I"]["u0"] == Fraction(4, 7)
    assert by_name["I"]["sheets"] == 3
    assert min(r["gamma_minus"] for r in rows) == Fraction(2)


def test_batch_report():
    import json

    report = json.loads(cg.batch_report("trefoil", TREFOIL))
    assert report["sigma"]["computed"] == -2
    assert report["geography"]["gamma3"] == 1
