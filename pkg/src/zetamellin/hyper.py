"""Hypergeometric functions 0F1, 1F1, 1F2, 2F1 and their connection identities.

Direct power series are used while the terms stay within a cancellation
budget.  Beyond it 1F1(-s; 1-s; w) goes through the incomplete gamma
function and 2F1(a, b; b+1; z) through its Euler integral.  1F2 is refused
outright for large arguments: callers must take the 1F1 route.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _de
from .branchc import cpow, plog
from .errors import CancellationError, ConvergenceError, DomainError, PoleError
from .special import (DEFAULT_CONTROL, SeriesControl, cgamma, gammainc_upper, poch,
                      rgamma)

STRATEGIES = ("direct-series", "recurrence-shifted", "integral-route")
F1F2_DIRECT_MAX = 40.0      # |z| for direct 1F2 in the f_{s,k} blocks
F1F2_REFUSE = 400.0         # |z| = (2 pi |a| d k)^2 / 4 with 2 pi |a| d k = 40
F1F1_DIRECT_MAX = 12.0
F2F1_DIRECT_MAX = 0.8
HYPER_CONTROL = SeriesControl(tol=1e-15)
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class HyperEval:
    value: complex
    abs_err: float
    strategy: str
    terms: int = 0


def _is_nonpos_int(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _check_lower(*params):
    for p in params:
        if _is_nonpos_int(complex(p)):
            raise PoleError(p, "hypergeometric lower parameter")


def _series(upper, lower, z, ctl: SeriesControl):
    """sum_n prod (upper)_n / prod (lower)_n z^n / n!; returns value, err, terms, max|term|."""
    z = complex(z)
    upper = [complex(u) for u in upper]
    lower = [complex(v) for v in lower]
    t = 1 + 0j
    s_re = [1.0]
    s_im = [0.0]
    total = 1 + 0j
    big = 1.0
    small = 0
    absum = 1.0
    for n in range(ctl.max_terms):
        num = z
        for u in upper:
            num *= u + n
        den = n + 1.0
        for v in lower:
            den *= v + n
        ratio = num / den
        t *= ratio
        if t == 0:
            return total, _EPS * absum, n + 1, big
        s_re.append(t.real)
        s_im.append(t.imag)
        at = abs(t)
        absum += at
        big = max(big, at)
        if (n & 31) == 31:
            total = complex(math.fsum(s_re), math.fsum(s_im))
            s_re, s_im = [total.real], [total.imag]
        cur = abs(complex(sum(s_re), sum(s_im)))
        if at <= ctl.tol * max(cur, 1e-300):
            small += 1
            # ratio-test tail bound, valid once the term ratios decrease
            q = abs(ratio)
            if small >= ctl.consecutive_small and q < 1:
                tail = at * q / (1 - q)
                if tail <= ctl.tol * max(cur, 1e-300):
                    total = complex(math.fsum(s_re), math.fsum(s_im))
                    return total, tail + 4 * _EPS * absum, n + 1, big
        else:
            small = 0
    raise ConvergenceError("hypergeometric series: max_terms exhausted")


def f0f1(beta, z, ctl: SeriesControl = HYPER_CONTROL) -> HyperEval:
    _check_lower(beta)
    v, err, n, _ = _series([], [beta], z, ctl)
    return HyperEval(v, err, "direct-series", n)


def _f1f1_shape_gamma(s: complex, w: complex):
    # 1F1(-s; 1-s; w) = -s (-w)^s gamma(-s, -w), gamma = Gamma - Gamma_upper
    mw = -w
    up = gammainc_upper(-s, mw)
    if _is_nonpos_int(-s):
        raise PoleError(s, "1F1(-s;1-s;.)")
    lower = cgamma(-s) - up if not _is_nonpos_int(-s) else -up
    return -s * cpow(mw, s) * lower


def f1f1(alpha, beta, z, ctl: SeriesControl = HYPER_CONTROL) -> HyperEval:
    """Confluent 1F1(alpha; beta; z), summed from the constant term 1."""
    alpha, beta, z = complex(alpha), complex(beta), complex(z)
    _check_lower(beta)
    if z == 0:
        return HyperEval(1 + 0j, 0.0, "direct-series", 0)
    if abs(z) > F1F1_DIRECT_MAX and abs(beta - alpha - 1) < 1e-15 and not _is_nonpos_int(alpha):
        s = -alpha
        v = _f1f1_shape_gamma(s, z)
        return HyperEval(v, 1e-14 * max(1.0, abs(v)) * max(1.0, abs(s)), "integral-route", 0)
    if abs(z) > F1F1_DIRECT_MAX and abs(alpha - 1) < 1e-15:
        # Kummer: 1F1(1; 1-s; w) = e^w 1F1(-s; 1-s; -w)
        v = cmath.exp(z) * _f1f1_shape_gamma(1.0 - beta, -z)
        return HyperEval(v, 1e-14 * max(1.0, abs(v)), "integral-route", 0)
    v, err, n, big = _series([alpha], [beta], z, ctl)
    if err > 1e-3 * max(abs(v), 1e-300):
        raise CancellationError(f"1F1 direct series: cancellation at |z| = {abs(z):.3g}")
    return HyperEval(v, err, "direct-series", n)


def f1f2(alpha, beta, gammap, z, ctl: SeriesControl = HYPER_CONTROL) -> HyperEval:
    """1F2(alpha; beta, gamma; z) by its power series; refused for |z| > 400."""
    alpha, beta, gammap, z = complex(alpha), complex(beta), complex(gammap), complex(z)
    _check_lower(beta, gammap)
    if abs(z) > F1F2_REFUSE:
        raise CancellationError(f"1F2 direct series refused at |z| = {abs(z):.3g}")
    v, err, n, big = _series([alpha], [beta, gammap], z, ctl)
    if big * _EPS > 1e-3 * max(abs(v), 1e-300):
        raise CancellationError("1F2 direct series: cancellation above 1e-3 relative")
    return HyperEval(v, err, "direct-series", n)


def _ts_unit(f, tol=1e-15, max_level=10):
    """Tanh-sinh on [0, 1]; f(t, dist, left) with dist the distance to the end."""
    acc = 0j
    prev = None
    for level in range(max_level + 1):
        off, w = _de.tanh_sinh_level(level)
        dist = 0.5 * off
        vals = w * (f(dist, dist, True) + f(1.0 - dist, dist, False))
        if level == 0:
            vals[0] *= 0.5
        vals = np.where(np.isfinite(vals), vals, 0.0)
        acc += complex(np.sum(vals)) * 0.5
        est = acc * 2.0 ** (-level)
        if prev is not None and level >= 4 and abs(est - prev) <= tol * max(1.0, abs(est)):
            return est, abs(est - prev)
        prev = est
    return prev, abs(est - prev) if prev is not None else math.inf


def _euler_b1(a1: complex, beta: complex, z: complex):
    """2F1(a1, beta; beta+1; z) = 1 + beta int_0^1 t^(beta-1) ((1 - z t)^(-a1) - 1) dt.

    The subtraction removes the t^(beta-1) endpoint mass; needs Re beta > -1.
    """
    def g(t):
        tb = np.exp((beta - 1.0) * np.log(t))
        return tb * np.expm1(-a1 * np.log1p(-z * t))

    tm = (1.0 / z).real
    if z.real > 1.0 and 0.0 < tm < 1.0:
        # split at the kernel peak near t = 1/z so both halves cluster nodes there
        v1, e1 = _ts_unit(lambda u, dist, left: tm * g(np.where(left, tm * dist, tm - tm * dist)))
        h = 1.0 - tm
        v2, e2 = _ts_unit(lambda u, dist, left: h * g(np.where(left, tm + h * dist, 1.0 - h * dist)))
        v, err = v1 + v2, e1 + e2
    else:
        v, err = _ts_unit(lambda t, dist, left: g(t))
    return 1.0 + beta * v, abs(beta) * err


def _euler_b1_near(beta: complex, z: complex):
    """2F1(1, beta; beta+1; z) for z just off the cut, pole at t0 = 1/z subtracted.

    beta int_0^1 t^(beta-1)/(1 - z t) dt with t^(beta-1) = t0^(beta-1) + (t^(beta-1) - t0^(beta-1));
    the first part is -t0^(beta-1) log(1 - z)/z, the second a smooth integrand.
    """
    t0 = 1.0 / z
    tb0 = cpow(t0, beta - 1.0)

    def f(t, dist, left):
        return (np.exp((beta - 1.0) * np.log(t)) - tb0) / (t - t0)

    v, err = _ts_unit(f)
    val = beta * (-v / z - tb0 * plog(1.0 - z) / z)
    return val, abs(beta / z) * err


def _euler_b1_cut(beta: complex, x: float, side: int):
    """2F1(1, beta; beta+1; x +- i0) for x > 1: principal value plus half residue."""
    t0 = 1.0 / x
    tb0 = t0 ** (beta - 1.0)

    def piece(lo, hi):
        h = hi - lo

        def f(u, dist, left):
            # exact offsets from t0 and from 0
            if lo == 0.0:
                t = np.where(left, h * dist, t0 - h * dist)
                dt = np.where(left, h * dist - t0, -h * dist)
            else:
                t = np.where(left, t0 + h * dist, 1.0 - h * dist)
                dt = np.where(left, h * dist, (1.0 - t0) - h * dist)
            near = np.abs(dt) < 0.5 * t0
            ratio = np.where(near, dt / t0, 0.0)
            num_near = tb0 * np.expm1((beta - 1.0) * np.log1p(ratio))
            tt = np.where(near, t0, t)
            num_far = np.exp((beta - 1.0) * np.log(tt)) - tb0
            num = np.where(near, num_near, num_far)
            return h * num / (-x * np.where(dt == 0, 1.0, dt))

        return _ts_unit(f)

    v1, e1 = piece(0.0, t0)
    v2, e2 = piece(t0, 1.0)
    pv = v1 + v2 - tb0 * math.log(x - 1.0) / x
    val = beta * (pv + side * 1j * math.pi * x ** (-beta))
    return val, abs(beta) * (e1 + e2)


def f2f1(a, b, c, z, side: int = 0, ctl: SeriesControl = HYPER_CONTROL) -> HyperEval:
    """Gauss 2F1(a, b; c; z).

    Direct series for |z| <= 0.8; otherwise the Euler integral for the shapes
    c = b + 1 or c = a + 1.  On the cut z > 1 the boundary value from the
    side ``side`` (+1 above, -1 below) is returned for the shape (1, b; b+1).
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    _check_lower(c)
    if z == 0:
        return HyperEval(1 + 0j, 0.0, "direct-series", 0)
    if z == 1:
        raise DomainError("2F1: branch point z = 1")
    if abs(z) <= F2F1_DIRECT_MAX:
        v, err, n, _ = _series([a, b], [c], z, ctl)
        return HyperEval(v, err, "direct-series", n)
    if abs(c - a - 1) < 1e-15 and abs(c - b - 1) >= 1e-15:
        a, b = b, a
    if abs(c - b - 1) >= 1e-15:
        raise DomainError("2F1 outside |z| <= 0.8 is only implemented for c = b + 1")
    on_cut = z.imag == 0.0 and z.real > 1.0
    if on_cut and side == 0:
        raise DomainError("2F1: argument on the cut [1, inf) needs a side")
    n_int = round(a.real)
    if z.real > 1.0 and a.imag == 0 and a.real == n_int and n_int >= 2:
        # near the cut the order-n kernel pole is ill-conditioned; step down to a = 1 by
        # F_n = (b (1-z)^(1-n) - (b-n+1) F_{n-1}) / (n-1), from integrating by parts
        r = f2f1(1.0, b, c, z, side, ctl)
        v, err = r.value, r.abs_err
        for m in range(2, n_int + 1):
            v = (b * (1.0 - z) ** (1 - m) - (b - m + 1.0) * v) / (m - 1.0)
            err *= abs((b - m + 1.0) / (m - 1.0))
        return HyperEval(v, err + _EPS * abs(v) * n_int, "recurrence-shifted", r.terms + n_int - 1)
    if on_cut and abs(a - 1) > 1e-15:
        raise DomainError("2F1: cut boundary values only for 2F1(1, b; b+1; z)")
    # contiguous step beta -> beta + 1 (only for a = 1); cut and near-cut routes want Re beta >= 1
    near = abs(a - 1) < 1e-15 and z.real > 1.0 and abs(z.imag) < z.real
    target = 1.0 if on_cut or near else 0.0
    pref = 1 + 0j
    acc = 0j
    beta = b
    steps = 0
    while beta.real <= target:
        if abs(a - 1) > 1e-15:
            raise DomainError("2F1 Euler route needs Re b > 0")
        if _is_nonpos_int(beta):
            raise PoleError(beta, "2F1 parameter")
        # F(beta) = 1 + z beta/(beta+1) F(beta+1)
        acc += pref
        pref *= z * beta / (beta + 1.0)
        beta += 1.0
        steps += 1
    if on_cut:
        v, err = _euler_b1_cut(beta, z.real, side)
    elif near:
        v, err = _euler_b1_near(beta, z)
    else:
        v, err = _euler_b1(a, beta, z)
    return HyperEval(acc + pref * v, abs(pref) * err, "integral-route", steps)


def kummer_terms(s, z):
    """Left side and the two right-hand terms of the Kummer connection formula.

    Points on (-1, 0) are approached from below, matching the conjugated
    power; points on (-inf, -1) from above, matching the principal one.
    """
    s, z = complex(s), complex(z)
    if s.imag == 0 and s.real == math.floor(s.real):
        raise DomainError("kummer: s must not be an integer")
    if z == 0 or z == -1:
        raise DomainError("kummer: z in {0, -1} excluded")
    neg_axis = z.imag == 0 and z.real < 0
    side = 0
    if neg_axis and -1 < z.real < 0:
        power = cpow(z.conjugate(), s.conjugate()).conjugate()
        side = -1
    else:
        power = cpow(z, s)
        side = 1 if neg_axis else 0
    lhs = math.pi / cmath.sin(math.pi * s) * power
    # z + i side 0 sends -z to the side -side and -1/z to the side +side
    side_mz = -side
    side_inv = side
    f1 = f2f1(1.0, 1.0 - s, 2.0 - s, -z, side=side_mz)
    f2 = f2f1(1.0, s, 1.0 + s, -1.0 / z, side=side_inv)
    t1, t2 = z * f1.value / (1.0 - s), f2.value / s
    return lhs, t1, t2


def kummer_sides(s, z):
    """Both sides of the Kummer connection formula.

    lhs = pi/sin(pi s) * (z^s, or conj(conj(z)^conj(s)) on (-1, 0)),
    rhs = z 2F1(1,1-s;2-s;-z)/(1-s) + 2F1(1,s;1+s;-1/z)/s.
    """
    lhs, t1, t2 = kummer_terms(s, z)
    return lhs, t1 + t2


def kummer_check(s, z) -> float:
    """|lhs - rhs| of the Kummer connection formula (absolute residual)."""
    lhs, rhs = kummer_sides(s, z)
    return abs(lhs - rhs)


def f1f1_shift(s, w, n: int, ctl: SeriesControl = HYPER_CONTROL) -> HyperEval:
    """1F1(-s; 1-s; w) through n steps of -e^w sum (s)_m/w^m + (s)_n/w^n 1F1(-s-n; 1-s-n; w)."""
    s, w = complex(s), complex(w)
    if n < 0:
        raise DomainError("f1f1_shift: n >= 0")
    if n == 0:
        r = f1f1(-s, 1.0 - s, w, ctl)
        return HyperEval(r.value, r.abs_err, r.strategy, r.terms)
    if w == 0:
        raise DomainError("f1f1_shift: w = 0")
    for j in range(n + 1):
        if _is_nonpos_int(-(s + j)) and (s + j) != 0:
            raise PoleError(s + j, "f1f1_shift")
    acc = 0j
    pm = 1 + 0j
    for m in range(1, n + 1):
        pm *= (s + m - 1) / w
        acc += pm
    inner = f1f1(-s - n, 1.0 - s - n, w, ctl)
    v = -cmath.exp(w) * acc + pm * inner.value
    return HyperEval(v, abs(pm) * inner.abs_err + _EPS * abs(cmath.exp(w) * acc),
                     "recurrence-shifted", inner.terms + n)


@dataclass(frozen=True)
class ShiftResult:
    value: complex
    remainder: complex
    bound: float
    strategy: str = "recurrence-shifted"


def f2f1_shift(s, ad, bk, n: int, eps: float | None = None) -> ShiftResult:
    """(ad/(1-s)) 2F1(1,1-s;2-s;-ad/bk)/bk as an n-step telescoped sum.

    value = sum_{m=1}^{n-1} (ad)^m (m-1)!/((1-s)_m (ad+bk)^m) + remainder,
    remainder = (n-1)! (ad)^n 2F1(n, n-s; n-s+1; -ad/bk) / ((1-s)_n bk^n).
    ``bound`` is (n-1)! |(s-n)/(Re s-n)| |ad/bk|^n (1-eps)^(-n) / |(1-s)_n|
    when |ad/bk| < eps < 1 and n > Re s, else inf.
    """
    s, ad, bk = complex(s), complex(ad), complex(bk)
    if n < 1:
        raise DomainError("f2f1_shift: n >= 1")
    if bk == 0 or ad + bk == 0:
        raise DomainError("f2f1_shift: excluded point")
    acc = 0j
    for m in range(1, n):
        acc += ad ** m * math.factorial(m - 1) / (poch(1.0 - s, m) * (ad + bk) ** m)
    z = -ad / bk
    if n == 1:
        core = f2f1(1.0, 1.0 - s, 2.0 - s, z, side=1 if (z.imag == 0 and z.real > 1) else 0)
    else:
        core = f2f1(n, n - s, n - s + 1.0, z)
    rem = math.factorial(n - 1) * ad ** n * core.value / (poch(1.0 - s, n) * bk ** n)
    q = abs(ad / bk)
    if eps is None:
        eps = 0.5 * (1.0 + q) if q < 1 else None
    if eps is not None and q < eps < 1 and n > s.real:
        bound = (math.factorial(n - 1) * abs((s - n) / (s.real - n)) * q ** n
                 * (1 - eps) ** (-n) / abs(poch(1.0 - s, n)))
    else:
        bound = math.inf
    return ShiftResult(acc + rem, rem, bound)


def pfaff_rhs(s, a) -> complex:
    """(1+1/a)^(-1)/(1-s) 2F1(1,1;2-s;(1+1/a)^(-1)), equal to a/(1-s) 2F1(1,1-s;2-s;-a)."""
    s, a = complex(s), complex(a)
    w = 1.0 / (1.0 + 1.0 / a)
    side = 1 if (w.imag == 0 and w.real > 1) else 0
    return w / (1.0 - s) * f2f1(1.0, 1.0, 2.0 - s, w, side=side).value


def hyper_identity_suite():
    """Residuals of the three hypergeometric identities on a fixed grid.

    (i)   1F1(-s;1-s;i 2 pi a) = e^{i 2 pi a} 1F1(1;1-s;-i 2 pi a)
    (ii)  f_{s,k} through the 1F2(1; ...) pair versus its defining form
    (iii) a/(1-s) 2F1(1,1-s;2-s;-a) versus its Pfaff rewrite
    """
    from .blocks import IdentityCase, f_sk, f_sk_alt

    out = []
    for s, a in [(0.7, 0.4), (-0.3, 0.25), (1.5 + 0.5j, 0.6), (-1.2, 1.1)]:
        lhs = f1f1(-s, 1 - s, 2j * math.pi * a).value
        rhs = cmath.exp(2j * math.pi * a) * f1f1(1, 1 - s, -2j * math.pi * a).value
        out.append(_resid("i", {"s": s, "a": a}, lhs, rhs))
    for s, a, b, c, d, k in [(-0.8, 0.6, 0.2, 0.0, 1.0, 2), (0.5, 0.3, 0.1, 0.25, 2.0, 1),
                             (-1.5 + 0.4j, 0.9, 0.35, 0.1, 1.0, 1), (2.5, 0.7, 0.61, 0.0, 0.5, 3)]:
        case = IdentityCase(s, a, b, c, d)
        lhs = f_sk(case, k).value
        rhs = f_sk_alt(case, k)
        out.append(_resid("ii", {"s": s, "a": a, "b": b, "c": c, "d": d, "k": k}, lhs, rhs))
    for s, a in [(0.25, 3.0), (-1.5, 0.7), (0.4 + 0.3j, 2.0), (2.5, 0.2)]:
        lhs = a / (1 - s) * f2f1(1, 1 - s, 2 - s, -a).value
        rhs = pfaff_rhs(s, a)
        out.append(_resid("iii", {"s": s, "a": a}, lhs, rhs))
    return out


def _resid(name, params, lhs, rhs):
    ab = abs(lhs - rhs)
    return {"identity": name, "params": params, "lhs": lhs, "rhs": rhs,
            "abs_resid": ab, "rel_resid": ab / max(abs(lhs), 1e-300)}
