"""Acceptance gate: one PASS/FAIL line per criterion.

Run under pytest (lines appear with -s or -v) or directly:
    python tests/test_acceptance.py
"""
import math
import sys
import time

import pytest

from zetamellin import blocks as B
from zetamellin import harness as H

_RUNS = {}


def suite(name):
    """Run a suite once per session; returns (report, json text, seconds)."""
    if name not in _RUNS:
        t0 = time.perf_counter()
        rep = H.run_suite(name)
        _RUNS[name] = (rep, H.to_json(rep), time.perf_counter() - t0)
    return _RUNS[name]


def _fails(rep, pred=None):
    pred = pred or (lambda r: True)
    return [r for r in rep.records if pred(r) and not r.passed]


def _worst(rep, pred=None):
    vals = [r.rel_resid for r in rep.records if pred is None or pred(r)]
    return max(vals) if vals else 0.0


def criterion_1():
    rep, _, secs = suite("kummer")
    seeded = H.kummer_points(H.DEFAULT_GRID.seed, 100)
    ok = rep.cases >= 100 and len(seeded) == 100 and rep.all_passed and secs <= 10
    ok = ok and all(r.abs_resid <= 1e-9 for r in rep.records)
    return ok, f"kummer {rep.passes}/{rep.cases} (100 seeded + 4 axis points), max scaled resid {_worst(rep):.2g}, {secs:.1f} s"


def criterion_2():
    rep, _, secs = suite("theorem1")
    principal = [r for r in rep.records if r.notes == "principal"]
    second = [r for r in rep.records if r.notes.startswith("second")]
    signs = {math.copysign(1, complex(r.params["a"]).real) for r in principal}
    ok = (rep.all_passed and secs <= 60 and signs == {1.0, -1.0} and principal and second
          and all(r.passed and r.tol <= 1e-8 for r in second)
          and all(r.rel_resid <= 1e-8 for r in principal))
    return ok, (f"principal {len(principal)} cases max rel {max(r.rel_resid for r in principal):.2g}, "
                f"second {len(second)} cases max {max(r.rel_resid for r in second):.2g}, {secs:.1f} s")


def criterion_3():
    rep, _, secs = suite("theorem2")
    notes = " ".join(r.notes for r in rep.records)
    second = [r for r in rep.records if r.notes.startswith("second display")]
    ok = (rep.all_passed and "b in Z" in notes and "ad+b in Z" in notes and second
          and all(complex(r.params["s"]) == 0.4 for r in second))
    return ok, (f"{rep.passes}/{rep.cases} incl. b in Z and ad+b in Z branches, "
                f"{len(second)} second-display cases at s = 0.4, max rel {_worst(rep):.2g}")


def criterion_4():
    rep, _, secs = suite("convergence")
    groups = {}
    for r in rep.records:
        key = r.notes.split(";")[0]
        key = "bound" if key.startswith("bound") else key
        groups.setdefault(key, []).append(r)
    real = groups.get("I_series vs quadrature", [])
    cplx = groups.get("I_series vs quadrature, complex a/b", [])
    paths = groups.get("general vs simple path", [])
    bounds = groups.get("bound", [])
    ok = (rep.all_passed and real and cplx and paths and bounds
          and all(r.tol <= 1e-6 for r in real) and all(r.tol <= 1e-5 for r in cplx)
          and all(r.tol <= 1e-12 for r in paths))
    labels = sorted({r.notes.split(";")[0].split()[-1] for r in bounds})
    return ok, (f"oracle real {len(real)}, complex {len(cplx)}, paths {len(paths)}, "
                f"bounds {'/'.join(labels)} {len(bounds)} checks, failures {len(_fails(rep))}, {secs:.1f} s")


def criterion_5():
    rep, _, _ = suite("hurwitz-identity")
    cont = [r for r in rep.records if r.notes == "continuation vs Euler-Maclaurin"]
    res = [complex(r.params["s"]).real for r in cont]
    zero = [r for r in rep.records if r.notes.startswith("zeta(0")]
    m1 = [r for r in rep.records if r.notes == "zeta(-1) = -1/12"]
    direct = abs(B.hurwitz_continued(-1, 0).value - (-1 / 12))
    ok = (cont and all(r.passed and r.rel_resid <= 1e-9 for r in cont) and min(res) > -3 and max(res) < 4
          and zero and all(r.passed and r.abs_resid <= 1e-8 for r in zero)
          and m1 and m1[0].passed and direct <= 1e-9)
    worst = max(r.rel_resid for r in cont)
    return ok, (f"continuation vs EM {len(cont)} cases max rel {worst:.2g}, zeta(0,.) {len(zero)} cases, "
                f"|zeta(-1) + 1/12| = {direct:.1g}")


def criterion_6():
    fe, _, _ = suite("functional-equation")
    hu, _, _ = suite("hurwitz-identity")
    ident = [r for r in hu.records if r.notes.startswith("Hurwitz identity")]
    bs = sorted({r.params["b"] for r in ident})
    res = [complex(r.params["s"]).real for r in fe.records]
    ok = (fe.all_passed and min(res) > -2 and max(res) < 3 and ident and bs == [0.1, 0.3, 0.7]
          and all(r.passed and r.tol <= 1e-9 for r in ident) and all(r.tol <= 1e-9 for r in fe.records))
    return ok, (f"functional equation {fe.passes}/{fe.cases} max rel {_worst(fe):.2g}, "
                f"Hurwitz identities (i)-(ii) {len(ident)} cases max {max(r.rel_resid for r in ident):.2g}")


def criterion_7():
    rep, _, _ = suite("corollary-limit")
    ok = rep.all_passed and {r.params["delta"] for r in rep.records} == {0.5, 1.0}
    ratios = ", ".join(f"{r.lhs.real / r.rhs.real:.2f}" for r in rep.records[:4])
    return ok, f"{rep.passes}/{rep.cases} ratios within [x/2, 2x] of exp(-2 pi delta); ratio/expected {ratios} ..."


def criterion_8():
    rep, _, _ = suite("logsine-recurrence")
    orc, _, _ = suite("oracle-consistency")
    ls0 = [r for r in rep.records if r.notes == "Ls(1,0,1) = 0"]
    closed = [r for r in rep.records if r.notes.startswith("generalized log-sine")]
    rec = [r for r in rep.records if r.notes.startswith("zeta(-n)")]
    gam = [r for r in orc.records if r.notes.startswith("int_0^inf sin(x)")]
    gs = {complex(r.params["s"]).real for r in gam}
    ok = (rep.all_passed and ls0 and ls0[0].abs_resid <= 1e-10
          and {r.params["n"] for r in closed} == {1, 2, 3} and all(r.abs_resid <= 1e-8 or r.rel_resid <= 1e-8 for r in closed)
          and rec and all(r.passed for r in gam) and {-0.3, -0.5, -0.7} <= gs)
    return ok, (f"Ls(1,0,1) = {abs(ls0[0].lhs):.1g}, closed forms n=1..3 {len(closed)} + {len(rec)} cases, "
                f"Gamma integral {len(gam)} points max {max(r.rel_resid for r in gam):.2g}")


def criterion_9():
    rep, _, _ = suite("oracle-consistency")
    f = [r for r in rep.records if r.notes.startswith("f_(s,k)")]
    F = [r for r in rep.records if r.notes.startswith("F_(s,k)")]
    ok = (rep.all_passed and f and F and max(r.params["k"] for r in f + F) == 20
          and all(r.tol <= 1e-8 for r in f) and all(r.tol <= 1e-7 for r in F))
    return ok, (f"head integrals {len(f)} max {max(r.rel_resid for r in f):.2g}, "
                f"tail integrals {len(F)} max {max(r.rel_resid for r in F):.2g}")


def criterion_10():
    same = []
    for name in H.SUITES:
        first = suite(name)[1]
        again = H.to_json(H.run_suite(name, threads=1))
        same.append(first.encode() == again.encode())
    return all(same), f"{sum(same)}/{len(same)} suites byte-identical across two single-threaded runs"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i, capsys):
    try:
        ok, detail = CRITERIA[i - 1]()
    except Exception as e:  # report, then fail
        ok, detail = False, f"error {type(e).__name__}: {e}"
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        failed += not ok
        print(_line(i, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
