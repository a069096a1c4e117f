"""Independent quadrature oracle for the Mellin-type integrals.

Finite pieces use tanh-sinh with nodes placed by their distance to the
nearest endpoint, so x^(-s-1) at 0 and logarithmic singularities at
breakpoints are resolved to ~1e-300.  Semi-infinite pieces come in two
flavours:

* sin/exp kernels: one Gauss-Legendre rule per half period between the
  kernel zeros, summed with the Cohen-Rodriguez Villegas-Zagier alternating
  acceleration;
* periodic kernels (sawtooth, log-sine): whole periods up to a cutoff X,
  followed by the asymptotic expansion of the remaining tail,
  sum_j (-1)^(j-1) m_j phi^(j-1)(X) / alpha^j, where the m_j are means of the
  iterated antiderivatives of the periodic factor, computed numerically from
  one period.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _de
from .branchc import branch_plan, sgn2
from .errors import BudgetError, DomainError, RegimeError

TOL_FINITE = 1e-9
TOL_TAIL = 1e-7
KINDS = ("frac-part", "log-sine", "sin-kernel", "exp-kernel", "floor-step", "log-one-minus")
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_est: float
    evals: int
    pieces: int


@dataclass(frozen=True)
class IntegrandSpec:
    """An integrand ``kernel(x) * x**(-s-1)`` over (lo, hi]; hi may be inf.

    params holds s, a, b and, where relevant, c, k, d.  For "log-sine" the
    flag ``reduced`` selects 1/2 log(4 sin^2) - pi |Im(ax+b)| instead of
    log(4 sin^2).  Breakpoints default to the real solutions of
    Re(a x + b) in Z inside the interval.
    """

    kind: str
    params: dict
    interval: tuple
    breakpoints: tuple = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown integrand kind {self.kind!r}")
        lo, hi = self.interval
        if not hi > lo:
            raise DomainError("interval must satisfy lo < hi")
        if self.breakpoints is None:
            object.__setattr__(self, "breakpoints", tuple(_default_breaks(self)))
        bps = tuple(float(x) for x in self.breakpoints)
        if any(not (lo < x < hi) for x in bps) or list(bps) != sorted(bps):
            raise DomainError("breakpoints must be sorted and strictly inside the interval")
        object.__setattr__(self, "breakpoints", bps)


def _default_breaks(spec: IntegrandSpec):
    lo, hi = spec.interval
    p = spec.params
    if spec.kind in ("frac-part", "log-sine", "floor-step"):
        return _grid_points(complex(p["a"]).real, complex(p["b"]).real, lo, hi)
    if spec.kind == "log-one-minus":
        d = p["d"]
        return [d] if lo < d < hi else []
    return []


def _grid_points(alpha: float, beta: float, lo: float, hi: float, limit: int = 200000):
    """Real x in (lo, hi) with alpha x + beta an integer, ascending."""
    if alpha == 0 or not math.isfinite(hi):
        return []
    ulo, uhi = alpha * lo + beta, alpha * hi + beta
    a, b = min(ulo, uhi), max(ulo, uhi)
    m0, m1 = math.floor(a) + 1, math.ceil(b) - 1
    if m1 - m0 > limit:
        raise BudgetError("too many breakpoints")
    xs = [(m - beta) / alpha for m in range(m0, m1 + 1)]
    xs = [x for x in xs if lo < x < hi]
    return sorted(xs)


class _Counter:
    def __init__(self, budget):
        self.evals = 0
        self.budget = budget

    def add(self, n):
        self.evals += int(n)
        if self.evals > self.budget:
            raise BudgetError(f"quadrature budget {self.budget} exhausted")


def _ts_batch(f, lo, hi, tol, counter, max_level=11):
    """Tanh-sinh over the pieces [lo_i, hi_i]; returns (sum, err).

    ``f(x, dist, left, idx)`` gets the node x, its distance to the nearest
    endpoint, which endpoint that is, and the piece index array.
    """
    lo = np.asarray(lo, dtype=float).reshape(-1, 1)
    hi = np.asarray(hi, dtype=float).reshape(-1, 1)
    idx = np.arange(lo.shape[0]).reshape(-1, 1)
    half = 0.5 * (hi - lo)
    acc = 0j
    prev = None
    err = math.inf
    for level in range(max_level + 1):
        off, w = _de.tanh_sinh_level(level)
        dist = half * off
        left = f(lo + dist, dist, True, idx)
        right = f(hi - dist, dist, False, idx)
        counter.add(2 * left.size)
        with np.errstate(invalid="ignore"):
            vals = w * (left + right)
        if level == 0:
            vals[:, 0] *= 0.5  # the centre node was counted twice
        vals = np.where(np.isfinite(vals), vals, 0.0)
        acc += complex(np.sum(vals * half))
        est = acc * 2.0 ** (-level)
        if prev is not None:
            err = abs(est - prev)
            if level >= 3 and err <= tol * max(1.0, abs(est)):
                return est, err
        prev = est
    return prev, err


def _es_tail(f, lo, tol, counter, scale=1.0, max_level=9):
    """exp-sinh for int_lo^inf f(x) dx with x = lo + scale * t."""
    acc = 0j
    prev = None
    err = math.inf
    for level in range(max_level + 1):
        t, w = _de.exp_sinh_level(level)
        vals = w * f(lo + scale * t)
        counter.add(t.size)
        vals = np.where(np.isfinite(vals), vals, 0.0)
        acc += complex(np.sum(vals)) * scale
        est = acc * 2.0 ** (-level)
        if prev is not None:
            err = abs(est - prev)
            if level >= 3 and err <= tol * max(1.0, abs(est)):
                return est, err
        prev = est
    return prev, err


def _cvz(terms):
    """Cohen-Rodriguez Villegas-Zagier sum of sum_k (-1)^k terms[k]."""
    n = len(terms)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0j
    for k in range(n):
        c = b - c
        s += c * terms[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def _power(x, s):
    # overflow only at masked endpoint nodes; those values are discarded
    with np.errstate(over="ignore", invalid="ignore"):
        return np.exp((-s - 1.0) * np.log(x))


def _poch(x, n):
    p = 1 + 0j
    for j in range(n):
        p *= x + j
    return p


# periodic factors, written in terms of r = u - (an integer)

def _saw(r):
    fr = np.real(r) - np.floor(np.real(r))
    fr = np.where(fr >= 1.0, 0.0, fr)
    return 0.5 - fr


def _one_minus_exp(z):
    # 1 - e^z without cancellation near z = 0
    return -2.0 * np.exp(0.5 * z) * np.sinh(0.5 * z)


def logsin_full(r):
    """Vectorised log(4 sin^2(pi r)) on the branch of the splitting formula."""
    r = np.asarray(r, dtype=complex)
    sg = np.where(r.imag >= 0, 1.0, -1.0)
    w = sg * r.real
    fr = w - np.floor(w)
    fr = np.where(fr >= 1.0, 0.0, fr)
    return (2j * math.pi * (0.5 - fr) + _TWO_PI * np.abs(r.imag)
            + 2.0 * np.log(_one_minus_exp(2j * math.pi * sg * r)))


def logsin_reduced(r):
    """1/2 log(4 sin^2(pi r)) - pi |Im r|."""
    r = np.asarray(r, dtype=complex)
    sg = np.where(r.imag >= 0, 1.0, -1.0)
    w = sg * r.real
    fr = w - np.floor(w)
    fr = np.where(fr >= 1.0, 0.0, fr)
    return 1j * math.pi * (0.5 - fr) + np.log(_one_minus_exp(2j * math.pi * sg * r))


def _pieces(lo, hi, bps):
    edges = [lo] + list(bps) + [hi]
    return np.array(edges[:-1]), np.array(edges[1:])


def _affine_kernel(P, a, b, s):
    """Integrand P(a x + b) x^(-s-1) evaluated through the endpoint offsets.

    Returns (make, counter-free f) where make(los, his) builds f for the
    batch integrator.  The phase a x + b is re-centred at each endpoint on
    the nearest integer of its real part, so P only ever sees small r.
    """
    a = complex(a)
    b = complex(b)

    def make(los, his):
        ulo = a * los + b
        uhi = a * his + b
        rlo = (ulo - np.round(ulo.real)).reshape(-1, 1)
        rhi = (uhi - np.round(uhi.real)).reshape(-1, 1)

        def f(x, dist, left, idx):
            r = rlo + a * dist if left else rhi - a * dist
            return P(r) * _power(x, s)

        return f

    return make


def _finite_affine(P, a, b, s, lo, hi, bps, tol, counter):
    los, his = _pieces(lo, hi, bps)
    f = _affine_kernel(P, a, b, s)(los, his)
    return _ts_batch(f, los, his, tol, counter)


_MOMENT_CACHE: dict = {}


def _tail_means(P, key, jmax, counter):
    """m_j: means of the iterated zero-based antiderivatives of P over a period."""
    if key is not None and (key, jmax) in _MOMENT_CACHE:
        return _MOMENT_CACHE[(key, jmax)]
    mus = []
    for j in range(1, jmax + 1):
        fj = math.factorial(j)

        def f(x, dist, left, idx, j=j, fj=fj):
            t = dist if left else 1.0 - dist
            r = dist if left else -dist
            return P(r) * (1.0 - t) ** j / fj

        v, _ = _ts_batch(f, [0.0], [1.0], 1e-15, counter)
        mus.append(v)
    ms = []
    for j in range(1, jmax + 1):
        m = mus[j - 1] - sum(ms[i - 1] / math.factorial(j - i + 1) for i in range(1, j))
        ms.append(m)
    if key is not None:
        _MOMENT_CACHE[(key, jmax)] = ms
    return ms


def _periodic_tail(P, key, alpha, beta, s, d, tol, counter, mean_zero=True):
    """int_d^inf P(alpha x + beta) x^(-s-1) dx for a 1-periodic, mean-zero P."""
    s = complex(s)
    if alpha < 0:
        return _periodic_tail(lambda r: P(-r), None if key is None else ("neg", key),
                              -alpha, -beta, s, d, tol, counter)
    if s.real <= -1:
        raise RegimeError("periodic tail needs Re s > -1")
    jmax = 10
    ms = _tail_means(P, key, jmax, counter)
    # first breakpoint at or beyond d
    u_d = alpha * d + beta
    m_first = math.ceil(u_d)
    x0 = (m_first - beta) / alpha
    # choose the cutoff so the last expansion term is below tol / 10
    cabs = max(abs(ms[-1]), 1e-300) * abs(_poch(s + 1.0, jmax - 1)) / alpha ** jmax
    xneed = (10.0 * cabs / tol) ** (1.0 / (s.real + jmax)) if cabs > 0 else x0
    nper = max(8, int(math.ceil(alpha * (max(xneed, x0) - x0))))
    nper = min(nper, 200000)
    X = (m_first + nper - beta) / alpha
    total = 0j
    err = 0.0
    if x0 > d:
        v, e = _finite_affine(P, alpha, beta, s, d, x0, [], tol * 0.1, counter)
        total += v
        err += e
    bps = [(m_first + j - beta) / alpha for j in range(1, nper)]
    v, e = _finite_affine(P, alpha, beta, s, x0, X, bps, tol * 0.1, counter)
    total += v
    err += e
    # phi^(n)(X) = (-1)^n (s+1)_n X^(-s-1-n)
    tail = 0j
    last = 0.0
    for j in range(1, jmax + 1):
        n = j - 1
        dphi = (-1) ** n * _poch(s + 1.0, n) * complex(X) ** (-s - 1.0 - n)
        term = (-1) ** (j - 1) * ms[j - 1] * dphi / alpha ** j
        tail += term
        last = abs(term)
    return total + tail, err + last


def _sin_tail(s, alpha, theta0, d, tol, counter, n_terms=40):
    """int_d^inf sin(2 pi alpha x + theta0) x^(-s-1) dx, real alpha != 0."""
    s = complex(s)
    if alpha < 0:
        v, e = _sin_tail(s, -alpha, -theta0, d, tol, counter, n_terms)
        return -v, e
    if s.real <= -1:
        raise RegimeError("oscillatory tail needs Re s > -1")
    # zeros x_j = (pi j - theta0) / (2 pi alpha)
    j0 = math.floor((_TWO_PI * alpha * d + theta0) / math.pi) + 1
    xz = lambda j: (math.pi * j - theta0) / (_TWO_PI * alpha)
    total = 0j
    err = 0.0
    first = xz(j0)
    if first > d:
        los, his = np.array([d]), np.array([first])
        f = _sin_fn(s, alpha, theta0)
        v, e = _ts_batch(f, los, his, tol * 0.1, counter)
        total += v
        err += e
    nodes, weights = _de.gauss_legendre(24)
    edges = np.array([xz(j0 + k) for k in range(n_terms + 1)])
    lo = edges[:-1].reshape(-1, 1)
    hi = edges[1:].reshape(-1, 1)
    half = 0.5 * (hi - lo)
    x = lo + half * (nodes + 1.0)
    vals = np.sin(_TWO_PI * alpha * x + theta0) * _power(x, s)
    counter.add(vals.size)
    pieces = np.sum(vals * weights, axis=1) * half[:, 0]
    signs = np.where(np.arange(n_terms) % 2 == 0, 1.0, -1.0)
    seq = pieces * signs
    full = _cvz(seq)
    coarse = _cvz(seq[: n_terms - 8])
    total += full
    err += abs(full - coarse)
    return total, err


def _sin_fn(s, alpha, theta0):
    def f(x, dist, left, idx):
        return np.sin(_TWO_PI * alpha * x + theta0) * _power(x, s)

    return f


def _split_zeros(alpha, theta0, lo, hi, limit=200000):
    """Zeros of sin(2 pi alpha x + theta0) strictly inside (lo, hi)."""
    if alpha == 0:
        return []
    c = _TWO_PI * alpha
    ulo, uhi = (c * lo + theta0) / math.pi, (c * hi + theta0) / math.pi
    a, b = min(ulo, uhi), max(ulo, uhi)
    m0, m1 = math.floor(a) + 1, math.ceil(b) - 1
    if m1 - m0 > limit:
        raise BudgetError("too many oscillations")
    xs = sorted((math.pi * m - theta0) / c for m in range(m0, m1 + 1))
    return [x for x in xs if lo < x < hi]


def _exp_finite(s, alpha, phase, lo, hi, tol, counter):
    """int_lo^hi exp(i (2 pi alpha x + phase)) x^(-s-1) dx; alpha, phase complex."""
    a_re = complex(alpha).real
    ph_re = complex(phase).real
    bps = _split_zeros(a_re, ph_re, lo, hi)
    los, his = _pieces(lo, hi, bps)

    def f(x, dist, left, idx):
        return np.exp(1j * (_TWO_PI * alpha * x + phase)) * _power(x, s)

    return _ts_batch(f, los, his, tol, counter)


def integrate(spec: IntegrandSpec, tol: float | None = None, budget: int = 20_000_000) -> QuadResult:
    """Integrate ``spec`` to absolute tolerance ``tol`` (relative above 1)."""
    lo, hi = spec.interval
    inf = not math.isfinite(hi)
    if tol is None:
        tol = TOL_TAIL if inf else TOL_FINITE
    counter = _Counter(budget)
    p = spec.params
    s = complex(p["s"])
    kind = spec.kind
    if lo == 0 and kind in ("frac-part", "log-sine", "floor-step", "sin-kernel", "exp-kernel") \
            and s.real >= 0 and not (kind == "sin-kernel" and _sin_vanishes_at_zero(p) and s.real < 1):
        raise RegimeError(f"{kind}: x^(-s-1) is not integrable at 0 for Re s >= 0")
    if kind == "frac-part":
        val, err, npieces = _do_periodic(_saw, "saw", p, lo, hi, spec.breakpoints, tol, counter)
    elif kind == "log-sine":
        val, err, npieces = _do_logsine(p, lo, hi, spec.breakpoints, tol, counter)
    elif kind == "floor-step":
        if inf:
            raise RegimeError("floor-step integrals are finite only")
        a, b = float(complex(p["a"]).real), float(complex(p["b"]).real)
        los, his = _pieces(lo, hi, spec.breakpoints)
        mids = np.floor(a * 0.5 * (los + his) + b).reshape(-1, 1)

        def f(x, dist, left, idx):
            return mids[idx[:, 0]] * _power(x, s)

        val, err = _ts_batch(f, los, his, tol, counter)
        npieces = los.size
    elif kind in ("sin-kernel", "exp-kernel"):
        val, err, npieces = _do_trig(kind, p, lo, hi, tol, counter)
    else:  # log-one-minus
        val, err, npieces = _do_log_one_minus(p, lo, hi, tol, counter)
    return QuadResult(complex(val), float(err), counter.evals, int(npieces))


def _sin_vanishes_at_zero(p):
    b, c, k = complex(p.get("b", 0)), complex(p.get("c", 0)), p.get("k", 1)
    return abs(math.sin(_TWO_PI * (b.real * k + c.real))) < 1e-15 and b.imag == 0 and c.imag == 0


def _do_periodic(P, key, p, lo, hi, bps, tol, counter):
    a, b = complex(p["a"]).real, complex(p["b"]).real
    s = complex(p["s"])
    if math.isfinite(hi):
        v, e = _finite_affine(P, a, b, s, lo, hi, bps, tol, counter)
        return v, e, len(bps) + 1
    if a == 0:
        raise RegimeError("periodic kernel with zero slope on an infinite interval")
    v, e = _periodic_tail(P, key, a, b, s, lo, tol, counter)
    return v, e, -1


def _do_logsine(p, lo, hi, bps, tol, counter):
    a, b = complex(p["a"]), complex(p["b"])
    s = complex(p["s"])
    reduced = bool(p.get("reduced", False))
    P = logsin_reduced if reduced else logsin_full
    if math.isfinite(hi):
        v, e = _finite_affine(P, a, b, s, lo, hi, bps, tol, counter)
        return v, e, len(bps) + 1
    if a.imag == 0:
        if a.real == 0:
            raise RegimeError("log-sine with zero slope on an infinite interval")
        if not reduced and b.imag != 0:
            raise RegimeError("full log-sine grows linearly in x; use reduced")
        ib = b.imag
        Pr = (lambda r: P(r.real + 1j * ib)) if ib != 0 else P
        key = ("ls", reduced, ib)
        v, e = _periodic_tail(Pr, key, a.real, b.real, s, lo, tol, counter)
        return v, e, -1
    if not reduced:
        raise RegimeError("full log-sine with complex slope diverges on (d, inf); use reduced")
    # complex slope: sawtooth part times i pi, plus an exponentially decaying log part
    plan = branch_plan(a, b, lo)
    cuts = [lo]
    if plan.d_plus > lo:
        cuts.append(plan.d_plus)
    total = 0j
    err = 0.0
    npieces = 0
    for i, start in enumerate(cuts):
        stop = cuts[i + 1] if i + 1 < len(cuts) else math.inf
        mid_x = start + 1.0 if not math.isfinite(stop) else 0.5 * (start + stop)
        sg = sgn2((a * mid_x + b).imag)
        al, be = sg * a.real, sg * b.real
        if math.isfinite(stop):
            bp = _grid_points(al, be, start, stop)
            v, e = _finite_affine(_saw, al, be, s, start, stop, bp, tol * 0.1, counter)
        else:
            v, e = _periodic_tail(_saw, "saw", al, be, s, start, tol * 0.1, counter)
        total += 1j * math.pi * v
        err += math.pi * e
        # log(1 - exp(2 pi i sg (a x + b))) decays like exp(-2 pi |Im(a x + b)|)
        if math.isfinite(stop):
            seg_hi = stop
        else:
            seg_hi = start + 8.0 / abs(a.imag) + 1.0
        bp = _grid_points(a.real, b.real, start, seg_hi)
        los, his = _pieces(start, seg_hi, bp)
        aa, bb = sg * a, sg * b

        def make(los=los, his=his, aa=aa, bb=bb):
            ulo = (aa * los + bb).reshape(-1, 1)
            uhi = (aa * his + bb).reshape(-1, 1)

            def f(x, dist, left, idx):
                u = ulo + aa * dist if left else uhi - aa * dist
                u = u - np.round(u.real)
                return np.log(_one_minus_exp(2j * math.pi * u)) * _power(x, s)

            return f

        v, e = _ts_batch(make(), los, his, tol * 0.1, counter)
        total += v
        err += e
        npieces += los.size + 1
        if not math.isfinite(stop):
            # remaining |log(1-q)| <= 2|q| beyond seg_hi
            q = math.exp(-_TWO_PI * abs((aa * seg_hi + bb).imag))
            err += 2.0 * q * seg_hi ** (-s.real) / max(s.real, 1e-3)
    return total, err, npieces


def _do_trig(kind, p, lo, hi, tol, counter):
    s = complex(p["s"])
    k = p.get("k", 1)
    a, b, c = complex(p["a"]), complex(p["b"]), complex(p.get("c", 0.0))
    alpha = a * k
    phase = _TWO_PI * (b * k + c)
    inf = not math.isfinite(hi)
    fin_hi = hi
    total = 0j
    err = 0.0
    npieces = 0
    if inf:
        if alpha.imag != 0 or phase.imag != 0:
            raise RegimeError("oscillatory tails need real a, b, c")
        fin_hi = lo
        if lo == 0:
            fin_hi = max(1.0, 1.0 / abs(alpha.real))
    if fin_hi > lo:
        v_exp, e1 = _exp_finite(s, alpha, phase, lo, fin_hi, tol, counter)
        if kind == "exp-kernel":
            total += v_exp
        else:
            # sin = (e^{i t} - e^{-i t}) / (2 i)
            v_neg, e2 = _exp_finite(s, -alpha, -phase, lo, fin_hi, tol, counter)
            total += (v_exp - v_neg) / 2j
            e1 = max(e1, e2)
        err += e1
        npieces += 1
    if inf:
        al, th = alpha.real, phase.real
        vs, es = _sin_tail(s, al, th, fin_hi, tol, counter)
        if kind == "sin-kernel":
            total += vs
            err += es
        else:
            vc, ec = _sin_tail(s, al, th + 0.5 * math.pi, fin_hi, tol, counter)
            total += vc + 1j * vs
            err += es + ec
        npieces += 41
    return total, err, npieces


def _do_log_one_minus(p, lo, hi, tol, counter):
    s = complex(p["s"])
    d = float(p["d"])
    total = 0j
    err = 0.0
    npieces = 0
    if lo < d:
        top = min(hi, d)

        def f(x, dist, left, idx):
            # distance to d is exact on the right end of a piece ending at d
            gap = (top - x) if left else dist + (d - top)
            return np.log(gap / d) * _power(x, s)

        v, e = _ts_batch(f, [lo], [top], tol, counter)
        total += v
        err += e
        npieces += 1
    if hi > d:
        start = max(lo, d)
        if not math.isfinite(hi) and s.real <= 0:
            raise RegimeError("log-one-minus tail needs Re s > 0")
        mid = min(hi, 2.0 * d) if start <= d else min(hi, start + d)

        def g(x, dist, left, idx):
            gap = (dist + (start - d)) if left else (x - d)
            return np.log(gap / d) * _power(x, s)

        v, e = _ts_batch(g, [start], [mid], tol, counter)
        total += v
        err += e
        npieces += 1
        if mid < hi:
            if math.isfinite(hi):
                v, e = _ts_batch(lambda x, dist, left, idx: np.log(x / d - 1.0) * _power(x, s),
                                 [mid], [hi], tol, counter)
            else:
                v, e = _es_tail(lambda x: np.log(x / d - 1.0) * _power(x, s), mid, tol, counter,
                                scale=d)
            total += v
            err += e
            npieces += 1
    return total, err, npieces


def I_oracle(case, tol: float = 1e-10, budget: int = 50_000_000) -> QuadResult:
    """Direct quadrature of I_s(a, b, c, d) with the sawtooth and log-sine parts."""
    s = complex(case.s)
    a, b, c, d = complex(case.a), complex(case.b), complex(case.c), float(case.d)
    if a.real == 0:
        raise RegimeError("I_oracle needs Re a != 0")
    cos_c = complex(np.cos(_TWO_PI * c))
    sin_c = complex(np.sin(_TWO_PI * c))
    total = 0j
    err = 0.0
    evals = 0
    pieces = 0
    if abs(cos_c) > 1e-14:
        r = integrate(IntegrandSpec("frac-part", {"s": s, "a": a.real, "b": b.real},
                                    (d, math.inf)), tol, budget)
        total += cos_c * math.pi * r.value
        err += abs(cos_c) * math.pi * r.err_est
        evals += r.evals
        pieces += max(r.pieces, 1)
    if abs(sin_c) > 1e-14:
        if s.real <= 0:
            raise RegimeError("log-sine tail of I_s needs Re s > 0")
        r = integrate(IntegrandSpec("log-sine", {"s": s, "a": a, "b": b, "reduced": True},
                                    (d, math.inf)), tol, budget)
        total -= sin_c * r.value
        err += abs(sin_c) * r.err_est
        evals += r.evals
        pieces += max(r.pieces, 1)
    return QuadResult(total, err, evals, pieces)
