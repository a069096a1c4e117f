import cmath
import io
import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetamellin import harness as H
from zetamellin.errors import UsageError


def test_suite_names():
    assert len(H.SUITES) == 11 and set(H.SUITES) == set(H.SUITE_TOL)


def test_unknown_suite():
    with pytest.raises(UsageError):
        H.run_suite("no-such-suite")


def test_grid_excludes_integer_neighborhoods():
    g = H.GridSpec(s_points=(0.95, 1.5, 2.05 + 0.01j, 3 + 2j), exclusion_radius=0.1)
    assert g.s_off_integers() == [1.5 + 0j, 3 + 2j]
    assert g.s_off_integers(lambda s: s.real > 2) == [3 + 2j]


def test_make_record_modes():
    r = H.make_record("x", {"s": 1}, 1.0, 1.0 + 1e-12, 1e-9)
    assert r.passed and r.rel_resid < 1e-11
    # small values are judged absolutely
    r = H.make_record("x", {}, 1e-20, 2e-20, 1e-9)
    assert r.passed
    r = H.make_record("x", {}, 0.5, 0.4, 1e-9, check="upper-bound")
    assert not r.passed and "margin=-0.0999" in r.notes
    r = H.make_record("x", {}, 0.3, math.inf, 1e-9, check="upper-bound")
    assert r.passed
    r = H.make_record("x", {}, 0.5, 0.5 + 2e-9, 1e-9, check="scaled")
    assert not r.passed


def test_failed_record():
    r = H.failed_record("x", {"s": 2}, ValueError("boom"), 1e-9)
    assert not r.passed and r.abs_resid == math.inf and "boom" in r.notes


def test_kummer_points_seeded():
    p1 = H.kummer_points(7, 50)
    assert p1 == H.kummer_points(7, 50)
    assert p1 != H.kummer_points(8, 50)
    for s, z in p1:
        assert abs(s - round(s.real)) >= 0.05
        assert 0.1 <= abs(z) <= 10
        assert abs(abs(cmath.phase(z)) - math.pi) >= 0.05


@pytest.mark.parametrize("t", H.RIEMANN_ZEROS[:2])
def test_zero_forms_vanish_at_zeros(t):
    rho = complex(0.5, t)
    assert abs(H.zero_form1(rho, 1.0, 1.0)) < 1e-9
    assert abs(H.zero_form2(rho, 0.7, 1.3)) < 1e-9


def test_zero_forms_off_zero():
    assert abs(H.zero_form1(0.5 + 17j, 1.0, 1.0)) > 1e-3


@pytest.mark.parametrize("name", ["functional-equation", "hyper-identities", "hurwitz-identity"])
def test_small_suites_pass(name):
    rep = H.run_suite(name)
    assert rep.cases > 0 and rep.all_passed, [r for r in rep.records if not r.passed]


def test_tolerance_override_can_fail():
    rep = H.run_suite("functional-equation", tol=1e-30)
    assert not rep.all_passed


def test_threads_do_not_change_results():
    a = H.run_suite("functional-equation", threads=1)
    b = H.run_suite("functional-equation", threads=4)
    assert H.to_json(a) == H.to_json(b)


def test_json_roundtrip_and_determinism():
    rep = H.run_suite("hyper-identities")
    text = H.to_json(rep)
    assert text == H.to_json(H.run_suite("hyper-identities"))
    doc = json.loads(text)
    assert doc["summary"]["seconds"] is None
    back = H.parse_json(text)
    assert H.to_json(back) == text
    assert json.loads(H.to_json(rep, timing=True))["summary"]["seconds"] >= 0


def test_nonfinite_values_serialize_as_strings():
    rep = H.Report("x", [H.failed_record("x", {"s": 2.0}, ValueError("e"), 1e-9)])
    doc = json.loads(H.to_json(rep))
    assert doc["records"][0]["abs_resid"] == "inf"
    assert doc["records"][0]["lhs_re"] == "nan"
    assert math.isinf(H.parse_json(H.to_json(rep)).records[0].abs_resid)


def test_csv_and_emit(tmp_path):
    rep = H.run_suite("functional-equation")
    text = H.to_csv(rep)
    lines = text.splitlines()
    assert lines[0].startswith("suite,params,lhs_re")
    assert len(lines) == rep.cases + 1
    buf = io.StringIO()
    H.emit(rep, "csv", buf)
    assert buf.getvalue() == text
    out = tmp_path / "r.json"
    H.emit(rep, "json", str(out))
    assert out.read_text() == H.to_json(rep)
    with pytest.raises(UsageError):
        H.emit(rep, "xml", buf)


@given(st.floats(allow_nan=True, allow_infinity=True))
def test_fmt_roundtrips_floats(x):
    t = H._fmt(x)
    y = float(t)
    assert (math.isnan(x) and math.isnan(y)) or (y == x and math.copysign(1, y) == math.copysign(1, x))
    if math.isfinite(x):
        z = json.loads(t)
        assert z == x and math.copysign(1, z) == math.copysign(1, x)
