"""Command line: ``zetamellin {eval,verify,oracle,list}``.

Exit codes: 0 success / all checks passed, 1 a check failed or a series did
not converge, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import math
import os
import re
import sys
from dataclasses import dataclass, field

from . import blocks as B
from . import harness
from .errors import ConvergenceError, DomainError, UsageError, ZMError
from .hyper import f1f1, f1f2, f2f1
from .quadrature import I_oracle, IntegrandSpec, integrate
from .special import SeriesControl, digamma, gamma, hurwitz_em, lerch_phi, polylog

_REAL = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")


def parse_complex(text: str) -> complex:
    """Parse "1.5", "2i", "1+2i", "-0.5-1e-3i", "i", "-i" (j accepted for i)."""
    t = text.strip().replace(" ", "")
    if t[-1:] not in ("i", "j"):
        if not _REAL.match(t):
            raise UsageError(f"not a complex literal: {text!r}")
        return complex(float(t), 0.0)
    body = t[:-1]
    cut = 0
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            cut = i
            break
    re_s, im_s = body[:cut], body[cut:]
    if im_s in ("", "+", "-"):
        im_s += "1"
    if (re_s and not _REAL.match(re_s)) or not _REAL.match(im_s):
        raise UsageError(f"not a complex literal: {text!r}")
    return complex(float(re_s) if re_s else 0.0, float(im_s))


def format_complex(z: complex) -> str:
    z = complex(z)
    re_s = format(z.real, ".17g")
    if z.imag == 0:
        return re_s
    im_s = format(abs(z.imag), ".17g")
    return f"{re_s}{'-' if z.imag < 0 else '+'}{im_s}i"


@dataclass
class CliConfig:
    command: str
    name: str = ""
    params: dict = field(default_factory=dict)
    tol: float | None = None
    max_terms: int | None = None
    fmt: str = "plain"
    threads: int = 1
    seed: int | None = None


# ---------------------------------------------------------------- function registry

def _real(p, key):
    z = p[key]
    if z.imag != 0:
        raise DomainError(f"{key} must be real")
    return z.real


def _int(p, key):
    x = _real(p, key)
    if x != math.floor(x):
        raise DomainError(f"{key} must be an integer")
    return int(x)


def _case(p):
    return B.IdentityCase(p["s"], p["a"], p["b"], p["c"], _real(p, "d"))


def _ctl(cfg):
    kw = {}
    if cfg.tol is not None:
        kw["tol"] = cfg.tol
    if cfg.max_terms is not None:
        kw["max_terms"] = cfg.max_terms
    return SeriesControl(**kw)


def _series_kw(cfg):
    kw = {}
    if cfg.tol is not None:
        kw["tol"] = cfg.tol
    if cfg.max_terms is not None:
        kw["k_max"] = cfg.max_terms
    return kw


CASE = {"s": None, "a": None, "b": 0, "c": 0, "d": 1}

# name -> (parameters with defaults (None = required), evaluator, regime)
FUNCTIONS = {
    "f_sk": (dict(CASE, k=1), lambda p, c: B.f_sk(_case(p), _int(p, "k")), "s not in {0, 1}"),
    "f_sk1": (dict(CASE, k=1), lambda p, c: B.f_sk1(_case(p), _int(p, "k")), "s not in {0, 1}"),
    "f_sk2": (dict(CASE, k=1), lambda p, c: B.f_sk2(_case(p), _int(p, "k")), "s not in {0, 1}"),
    "g_sk": ({"s": None, "a": None, "b": 0, "c": 0, "k": 1},
             lambda p, c: B.g_sk(p["s"], p["a"], p["b"], p["c"], _int(p, "k")), "s not in Z>=0, a != 0"),
    "F_sk": (dict(CASE, k=1), lambda p, c: B.F_sk(_case(p), _int(p, "k")), "a != 0"),
    "I_series": (CASE, lambda p, c: B.I_series(_case(p), **_series_kw(c)), "Re a != 0"),
    "M_lhs": ({"s": None, "a": None, "b": 0, "d": 1},
              lambda p, c: B.M_lhs(p["s"], _real(p, "a"), _real(p, "b"), _real(p, "d")), "real a != 0, s != 1"),
    "R_remainder": ({"s": None, "a": None, "b": 0, "d": 1},
                    lambda p, c: B.R_remainder(p["s"], _real(p, "a"), _real(p, "b"), _real(p, "d")), "a > 0"),
    "H_lhs": ({"s": None, "a": None, "b": 0, "d": 1},
              lambda p, c: B.H_lhs(p["s"], _real(p, "a"), _real(p, "b"), _real(p, "d")), "real a != 0, s not in Z"),
    "hurwitz_continued": ({"s": None, "b": 0, "a": 1, "d": 1},
                          lambda p, c: B.hurwitz_continued(p["s"], _real(p, "b"), _real(p, "a"), _real(p, "d")),
                          "s != 1, a > 0, d > 0"),
    "logsine_mellin_finite": (CASE, lambda p, c: B.logsine_mellin_finite(_case(p)), "Re s < 0, Re a != 0"),
    "logsine_mellin_tail": (CASE, lambda p, c: B.logsine_mellin_tail(_case(p)), "Re s > 1, real a != 0, real b"),
    "ls_closed": ({"n": None, "a": None, "b": 0, "d": 1},
                  lambda p, c: B.ls_closed(_int(p, "n"), _real(p, "a"), _real(p, "b"), _real(p, "d")),
                  "n >= 1, real a != 0"),
    "zeta_h": ({"s": None, "x": 1}, lambda p, c: hurwitz_em(p["s"], p["x"]), "s != 1, x not in Z<=0"),
    "polylog": ({"s": None, "z": None}, lambda p, c: polylog(p["s"], p["z"], _ctl(c)), "|z| <= 1"),
    "lerch_phi": ({"s": None, "z": None, "x": 0}, lambda p, c: lerch_phi(p["s"], p["z"], p["x"], _ctl(c)),
                  "|z| <= 1"),
    "gamma": ({"z": None}, lambda p, c: gamma(p["z"]), "z not in Z<=0"),
    "digamma": ({"z": None}, lambda p, c: digamma(p["z"]), "z not in Z<=0"),
    "f1f1": ({"alpha": None, "beta": None, "z": None},
             lambda p, c: f1f1(p["alpha"], p["beta"], p["z"], _ctl(c)), "beta not in Z<=0"),
    "f1f2": ({"alpha": None, "beta": None, "gamma": None, "z": None},
             lambda p, c: f1f2(p["alpha"], p["beta"], p["gamma"], p["z"], _ctl(c)), "|z| <= 400"),
    "f2f1": ({"a": None, "b": None, "c": None, "z": None, "side": 0},
             lambda p, c: f2f1(p["a"], p["b"], p["c"], p["z"], _int(p, "side"), _ctl(c)),
             "z off [1, inf) unless side = +-1"),
}


def _quad(kind, p, lo, hi, cfg, **extra):
    tol = cfg.tol if cfg.tol is not None else 1e-10
    params = {"s": p["s"], "a": p["a"], "b": p["b"]}
    params.update(extra)
    return integrate(IntegrandSpec(kind, params, (lo, hi)), tol)


def _oracle_m(p, cfg):
    q = _quad("frac-part", p, _real(p, "d"), math.inf, cfg)
    return q.value * p["s"], q.err_est * abs(p["s"])


ORACLES = {
    "I_series": (CASE, lambda p, c: I_oracle(_case(p), c.tol or 1e-10)),
    "f_sk": (dict(CASE, k=1), lambda p, c: _scale(
        _quad("sin-kernel", p, 0, _real(p, "d"), c, c=p["c"], k=_int(p, "k")), -1 / _int(p, "k"))),
    "F_sk": (dict(CASE, k=1), lambda p, c: _scale(
        _quad("sin-kernel", p, _real(p, "d"), math.inf, c, c=p["c"], k=_int(p, "k")), 1 / _int(p, "k"))),
    "logsine_mellin_finite": (CASE, lambda p, c: _quad("log-sine", p, 0, _real(p, "d"), c)),
    "logsine_mellin_tail": (CASE, lambda p, c: _quad("log-sine", p, _real(p, "d"), math.inf, c)),
    "M_lhs": ({"s": None, "a": None, "b": 0, "d": 1}, _oracle_m),
    "ls_closed": ({"n": None, "a": None, "b": 0, "d": 1}, lambda p, c: _scale(
        _quad("log-sine", dict(p, s=-p["n"]), 0, _real(p, "d"), c), -0.5)),
}


def _scale(q, f):
    return q.value * f, q.err_est * abs(f)


def _value_err(r):
    """(value, error estimate, converged) from any evaluator result."""
    if isinstance(r, tuple):
        return complex(r[0]), float(r[1]), True
    if hasattr(r, "abs_err"):
        return complex(r.value), float(r.abs_err), bool(getattr(r, "converged", True))
    if hasattr(r, "err_est"):
        return complex(r.value), float(r.err_est), True
    return complex(r), math.nan, True


# ---------------------------------------------------------------- argument handling

def _env_float(name):
    v = os.environ.get(name)
    if v is None or v == "":
        return None
    try:
        return float(v)
    except ValueError:
        raise UsageError(f"{name} must be a number") from None


def _env_int(name):
    v = _env_float(name)
    return None if v is None else int(v)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    ap = _Parser(prog="zetamellin", description="Evaluate, cross-check and verify the Mellin-transform identities.")
    sub = ap.add_subparsers(dest="command", required=True)
    for cmd in ("eval", "oracle"):
        p = sub.add_parser(cmd, help="evaluate a function" if cmd == "eval" else "evaluate by quadrature")
        p.add_argument("--fn", required=True)
        p.add_argument("--tol", type=float)
        p.add_argument("--max-terms", type=int)
        p.add_argument("--format", choices=("plain", "json"), default="plain")
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help="suite name or 'all'")
    p.add_argument("--tol", type=float)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--threads", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--timing", action="store_true", help="include wall time in JSON summaries")
    sub.add_parser("list", help="list suites and functions")
    return ap


def _parse_params(extra, spec):
    """--key=value / --key value pairs; keys must belong to ``spec``."""
    out = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        key, eq, val = tok[2:].partition("=")
        if not eq:
            if i + 1 >= len(extra):
                raise UsageError(f"missing value for --{key}")
            i += 1
            val = extra[i]
        if key not in spec:
            raise UsageError(f"unknown parameter --{key}; expected {', '.join(spec)}")
        if key in out:
            raise UsageError(f"parameter --{key} given twice")
        out[key] = parse_complex(val)
        i += 1
    for key, default in spec.items():
        if key not in out:
            if default is None:
                raise UsageError(f"missing required parameter --{key}")
            out[key] = complex(default)
    return out


def _emit_value(cfg, name, params, value, err, ok, route, out):
    if cfg.fmt == "json":
        doc = {"fn": name, "route": route,
               "params": {k: harness._scalar(v) for k, v in params.items()},
               "value": [value.real, value.imag], "abs_err": err, "converged": ok}
        out.write(harness._dump(doc) + "\n")
    else:
        out.write(f"{format_complex(value)} {format(err, '.3g')}\n")


def _cmd_eval(cfg, out, errs, table, route):
    if cfg.name not in table:
        raise UsageError(f"unknown function {cfg.name!r}; see `zetamellin list`")
    spec, fn = table[cfg.name][0], table[cfg.name][1]
    params = _parse_params(cfg.params, spec)
    value, err, ok = _value_err(fn(params, cfg))
    _emit_value(cfg, cfg.name, params, value, err, ok, route, out)
    if not ok:
        errs.write("zetamellin: series did not reach the tolerance within the term budget\n")
    return 0 if ok else 1


def _cmd_verify(cfg, args, out):
    names = harness.SUITES if cfg.name == "all" else (cfg.name,)
    grid = harness.DEFAULT_GRID
    if cfg.seed is not None:
        grid = harness.GridSpec(seed=cfg.seed)
    ok = True
    chunks = []
    for name in names:
        rep = harness.run_suite(name, grid, cfg.tol, cfg.threads)
        ok = ok and rep.all_passed
        if cfg.fmt == "json":
            chunks.append(harness.to_json(rep, args.timing))
        elif cfg.fmt == "csv":
            chunks.append(harness.to_csv(rep))
        else:
            fails = [r for r in rep.records if not r.passed]
            lines = [f"{name}: {rep.passes}/{rep.cases} passed, max rel resid "
                     f"{rep.max_rel_resid:.3g}, {rep.seconds:.1f}s"]
            lines += [f"  FAIL {r.params} {r.notes} abs={r.abs_resid:.3g}" for r in fails]
            chunks.append("\n".join(lines) + "\n")
    text = "".join(chunks)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0 if ok else 1


def _cmd_list(out):
    out.write("suites:\n")
    for s in harness.SUITES:
        out.write(f"  {s}\n")
    out.write("functions (eval):\n")
    for name, (spec, _, regime) in FUNCTIONS.items():
        args = " ".join(f"--{k}" + ("" if v is None else f"={v}") for k, v in spec.items())
        out.write(f"  {name:22s} {args}   [{regime}]\n")
    out.write("functions (oracle):\n")
    for name, (spec, _) in ORACLES.items():
        out.write(f"  {name}\n")
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        try:
            args, extra = parser.parse_known_args(argv)
        except SystemExit as e:
            return 0 if e.code == 0 else 2
        tol = getattr(args, "tol", None)
        tol = tol if tol is not None else _env_float("ZM_TOL")
        max_terms = getattr(args, "max_terms", None)
        max_terms = max_terms if max_terms is not None else _env_int("ZM_MAX_TERMS")
        threads = getattr(args, "threads", None)
        threads = threads if threads is not None else (_env_int("ZM_THREADS") or 1)
        if args.command == "list":
            if extra:
                raise UsageError(f"unexpected arguments {extra}")
            return _cmd_list(out)
        if args.command == "verify":
            if extra:
                raise UsageError(f"unexpected arguments {extra}")
            if args.suite != "all" and args.suite not in harness.SUITES:
                raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(harness.SUITES)}")
            cfg = CliConfig("verify", args.suite, {}, tol, max_terms, args.format, max(1, threads), args.seed)
            return _cmd_verify(cfg, args, out)
        cfg = CliConfig(args.command, args.fn, extra, tol, max_terms, args.format, 1)
        if args.command == "eval":
            return _cmd_eval(cfg, out, err, FUNCTIONS, "series")
        return _cmd_eval(cfg, out, err, ORACLES, "quadrature")
    except (UsageError, DomainError) as e:
        err.write(f"zetamellin: {e}\n")
        return 2
    except (ConvergenceError, ZMError, ArithmeticError) as e:
        err.write(f"zetamellin: {type(e).__name__}: {e}\n")
        return 1
