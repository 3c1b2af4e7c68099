"""Smoke tests for the python bindings."""

import math

import pytest

import riccati_exact as rk


def test_solve_poly_power_fixture():
    # x y' = (2 - x^2) y + y^2 carries 0 and x^2
    report = rk.solve_poly(a="x", b1="2-x^2", b2="1")
    assert report["kind"] == "poly"
    assert report["bound_ok"] is True
    assert report["complete_over_rationals"] is True
    polys = [s["poly"] for s in report["solutions"]]
    assert ["0"] in polys
    assert ["0", "0", "1"] in polys


def test_solve_poly_extremal_counts():
    report = rk.gen_extremal_poly(4, 5, ["1", "2", "3", "4"])
    assert report["count"] == 5
    resolved = rk.solve_poly(
        a=rk.poly_to_str(report["equation"]["a"]),
        b1=rk.poly_to_str(report["equation"]["b1"]),
        b2="1",
    )
    assert resolved["count"] == 5
    assert [s["poly"] for s in resolved["solutions"]] == [
        s["poly"] for s in report["solutions"]
    ]


def test_solve_trig_eta1_fixture():
    report = rk.solve_trig(A="sin(t)", B1="2cos(t)", B2="-1")
    assert report["count"] == 3
    assert report["bound"] == 3
    trigs = [s["trig"] for s in report["solutions"]]
    assert {"a0": "1", "cos": ["1"], "sin": ["0"]} in trigs
    assert {"a0": "-1", "cos": ["1"], "sin": ["0"]} in trigs


def test_verify():
    assert rk.verify_poly("x", "0", "3-x^3", "1", "x^3") is True
    assert rk.verify_poly("x", "0", "3-x^3", "1", "x^2") is False
    assert rk.verify_trig("sin(t)", "0", "2cos(t)", "-1", "1+cos(t)") is True


def test_phi_round_trip():
    image = rk.phi_forward("cos(t)")
    assert image == {"numerator": ["1", "0", "-1"], "nu": 1}
    back = rk.phi_inverse(image["numerator"], image["nu"])
    assert back == {"a0": "0", "cos": ["1"], "sin": ["0"]}


def test_cross_ratio_constant():
    c = rk.cross_ratio(
        "0", "(x-2)(x-3)(x-4)", "(x-1)(x-3)(x-4)", "(x-1)(x-2)(x-4)"
    )
    assert c == "1/2"


def test_parse_errors_carry_positions():
    with pytest.raises(ValueError, match="offset 2"):
        rk.parse_poly("x^^2")
    with pytest.raises(ValueError):
        rk.parse_trig("cos(1.5t)")


def test_sample_csv_shape():
    csv = rk.sample_csv("sin(t)", "", "2cos(t)", "-1", n=37)
    lines = csv.strip().splitlines()
    assert lines[0] == "theta,A,Y1,Y2,Y3"
    assert len(lines) == 38
    first = lines[1].split(",")
    assert math.isclose(float(first[0]), 0.0)


def test_fuzz_no_violations():
    report = rk.fuzz("poly", count=25, max_eta=3, seed=11)
    assert report["violations"] == 0
