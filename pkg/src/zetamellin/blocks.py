"""Building blocks of the fractional-part and log-sine Mellin expansions.

Notation: for a piece (alpha, phi) and a cut point X

    head_k(X) = -(1/k) int_0^X   exp(i 2 pi k (alpha x + phi)) x^(-s-1) dx
    tail_k(X) =  (1/k) int_X^inf exp(i 2 pi k (alpha x + phi)) x^(-s-1) dx

head_k is the 1F1(-s; 1-s; .) expression of the finite Fourier integrals and
tail_k the incomplete-gamma form of their complements.  f_{s,k}, F_{s,k} and
every term of the I_s series are linear combinations of these.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .branchc import TWO_PI, BranchPlan, branch_plan, cpow, frac, plog, sgn2
from .errors import (BranchError, BudgetError, ConvergenceError, DomainError, PoleError,
                     RegimeError)
from .hyper import f1f1, f1f2, f2f1, f2f1_shift
from .special import (EULER_GAMMA, EvalResult, cdigamma, cgamma,
                      gammainc_upper_scaled, hurwitz_em, lerch_phi, li, poch,
                      zeta_h)

F1F2_BLOCK_MAX = 9.0     # |pi^2 a^2 d^2 k^2| for the direct 1F2 route
HEAD_SERIES_MAX = 2.0    # |w| for the direct 1F1 route in head_k
_EPS = 2.220446049250313e-16


def _is_int(x: complex) -> bool:
    x = complex(x)
    return x.imag == 0.0 and x.real == math.floor(x.real)


@dataclass(frozen=True)
class IdentityCase:
    s: complex
    a: complex
    b: complex = 0.0
    c: complex = 0.0
    d: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "d", float(self.d))
        if not self.d > 0:
            raise DomainError("IdentityCase: d must be positive")

    @property
    def plan(self) -> BranchPlan:
        return branch_plan(self.a, self.b, self.d)

    @property
    def validity(self) -> frozenset:
        flags = set()
        if self.s.real > 1:
            flags.add("ReS>1")
        if self.a.imag == 0:
            flags.add("a real")
        if self.b.imag == 0:
            flags.add("b real")
        if _is_int(self.b):
            flags.add("b in Z")
        if _is_int(self.a * self.d + self.b):
            flags.add("ad+b in Z")
        if self.a.real != 0:
            flags.add("Re a != 0")
        return frozenset(flags)

    def replace(self, **kw) -> "IdentityCase":
        vals = dict(s=self.s, a=self.a, b=self.b, c=self.c, d=self.d)
        vals.update(kw)
        return IdentityCase(**vals)


@dataclass(frozen=True)
class TailBoundParams:
    k0: int
    eps: float = 0.0

    def __post_init__(self):
        if self.k0 < 1:
            raise DomainError("TailBoundParams: k0 >= 1")


def tail_params(s, a, eps: float = 0.0) -> TailBoundParams:
    """k0: first k where 1 - (2 pi |a| k)^(1 + Re s) changes sign, else 1."""
    s = complex(s)
    p = 1.0 + s.real
    x = TWO_PI * abs(complex(a))

    def sg(k):
        return sgn2(1.0 - (x * k) ** p) if k > 0 else sgn2(1.0 - (0.0 if p > 0 else math.inf))

    for k in range(1, 100000):
        if sg(k - 1) != sg(k):
            return TailBoundParams(k, eps)
    return TailBoundParams(1, eps)


# ---------------------------------------------------------------- primitives

def _expi(z: complex) -> complex:
    try:
        return cmath.exp(1j * z)
    except OverflowError:
        raise ConvergenceError("exponential overflow in block evaluation") from None


def head_k(s, alpha, phi, X, k):
    """-(1/k) int_0^X exp(i 2pi k (alpha x + phi)) x^(-s-1) dx, continued in s.

    Returns (value, abs_err).  Equals exp(i2pi k phi)/(s X^s k) 1F1(-s;1-s;i2pi k alpha X).
    """
    s, alpha, phi = complex(s), complex(alpha), complex(phi)
    w = 1j * TWO_PI * k * alpha * X
    if s == 0:
        raise PoleError(0, "head_k")
    if abs(w) <= HEAD_SERIES_MAX:
        r = f1f1(-s, 1.0 - s, w)
        pre = _expi(TWO_PI * k * phi) / (s * cpow(X, s) * k)
        return pre * r.value, abs(pre) * r.abs_err
    # -(1/k)[(-i 2pi k alpha)^s Gamma(-s) e^{i2pi k phi} - X^{-s} e^{i2pi k(alpha X+phi)} h]
    h = gammainc_upper_scaled(-s, -w)
    full = cpow(-1j * TWO_PI * k * alpha, s) * cgamma(-s) * _expi(TWO_PI * k * phi)
    edge = cpow(X, -s) * _expi(TWO_PI * k * (alpha * X + phi)) * h
    v = -(full - edge) / k
    return v, 1e-14 * (abs(full) + abs(edge)) / k


def tail_k(s, alpha, phi, X, k):
    """(1/k) int_X^inf exp(i 2pi k (alpha x + phi)) x^(-s-1) dx for Im alpha >= 0, entire in s."""
    s, alpha, phi = complex(s), complex(alpha), complex(phi)
    if alpha == 0:
        raise DomainError("tail_k: alpha = 0")
    z = -1j * TWO_PI * k * alpha * X
    if abs(z) >= 0.25:
        h = gammainc_upper_scaled(-s, z)
        v = cpow(X, -s) * _expi(TWO_PI * k * (alpha * X + phi)) * h / k
        return v, 1e-14 * abs(v)
    hv, he = head_k(s, alpha, phi, X, k)
    full = cpow(-1j * TWO_PI * k * alpha, s) * cgamma(-s) * _expi(TWO_PI * k * phi) / k
    return full + hv, he + 1e-15 * abs(full)


# ---------------------------------------------------------------- f, g, F

def _result(v, err, terms=1, ok=True) -> EvalResult:
    return EvalResult(complex(v), float(err), int(terms), bool(ok))


def _check_s_pole(s: complex):
    if s == 0 or s == 1:
        raise PoleError(s, "1/s or 1/(1-s) prefactor")


def f_sk1(case: IdentityCase, k: int) -> EvalResult:
    """2 pi a d^(1-s) cos(2pi(bk+c))/(s-1) 1F2(1/2-s/2; 3/2, 3/2-s/2; -pi^2 a^2 d^2 k^2)."""
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    _check_s_pole(s)
    z = -(math.pi * a * d * k) ** 2
    cosv = cmath.cos(TWO_PI * (b * k + c))
    if abs(z) <= F1F2_BLOCK_MAX:
        r = f1f2(0.5 - s / 2, 1.5, 1.5 - s / 2, z)
        pre = TWO_PI * a * d ** (1 - s) * cosv / (s - 1)
        return _result(pre * r.value, abs(pre) * r.abs_err, r.terms)
    base = f_sk(IdentityCase(s, a, 0, 0, d), k)
    return _result(cosv * base.value, abs(cosv) * base.abs_err, base.terms)


def f_sk2(case: IdentityCase, k: int) -> EvalResult:
    """sin(2pi(bk+c))/(s d^s k) 1F2(-s/2; 1/2, 1-s/2; -pi^2 a^2 d^2 k^2)."""
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    _check_s_pole(s)
    z = -(math.pi * a * d * k) ** 2
    sinv = cmath.sin(TWO_PI * (b * k + c))
    if abs(z) <= F1F2_BLOCK_MAX:
        r = f1f2(-s / 2, 0.5, 1 - s / 2, z)
        pre = sinv / (s * d ** s * k)
        return _result(pre * r.value, abs(pre) * r.abs_err, r.terms)
    base = f_sk(IdentityCase(s, a, 0, 0.25, d), k)
    return _result(sinv * base.value, abs(sinv) * base.abs_err, base.terms)


def f_sk(case: IdentityCase, k: int) -> EvalResult:
    """f_{s,k}(a,b,c,d) = -(1/k) int_0^d sin(2pi(akx+bk+c)) x^(-s-1) dx, continued in s."""
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    _check_s_pole(s)
    if abs((math.pi * a * d * k) ** 2) <= F1F2_BLOCK_MAX:
        r1, r2 = f_sk1(case, k), f_sk2(case, k)
        return _result(r1.value + r2.value, r1.abs_err + r2.abs_err, r1.terms + r2.terms)
    # sin = (e^{i.} - e^{-i.})/(2i) applied to the head integrals
    hp, ep = head_k(s, a, b + c / k, d, k)
    hm, em = head_k(s, -a, -b - c / k, d, k)
    return _result((hp - hm) / 2j, (ep + em) / 2, 2)


def f_sk_alt(case: IdentityCase, k: int) -> complex:
    """f_{s,k} through the 1F2(1; ...) pair.

    d^(-s)/(s k) sin(Theta) 1F2(1; 1/2-s/2, 1-s/2; -pi^2 a^2 d^2 k^2)
    - 2 pi a d^(1-s)/(s (1-s)) cos(Theta) 1F2(1; 1-s/2, 3/2-s/2; ...),
    Theta = 2pi(adk + bk + c).
    """
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    _check_s_pole(s)
    z = -(math.pi * a * d * k) ** 2
    th = TWO_PI * (a * d * k + b * k + c)
    e1 = f1f2(1, 0.5 - s / 2, 1 - s / 2, z).value
    e2 = f1f2(1, 1 - s / 2, 1.5 - s / 2, z).value
    return (d ** (-s) / (s * k) * cmath.sin(th) * e1
            - TWO_PI * a * d ** (1 - s) / (s * (1 - s)) * cmath.cos(th) * e2)


def g_sk(s, a, b, c, k: int) -> EvalResult:
    """(k^(s-1)/2i) (2pi)^s Gamma(-s) (e^{i2pi(bk+c)} (-ia)^s - e^{-i2pi(bk+c)} (ia)^s)."""
    s, a, b, c = complex(s), complex(a), complex(b), complex(c)
    if _is_int(s) and s.real >= 0:
        raise PoleError(s, "Gamma(-s)")
    if a == 0:
        raise DomainError("g_sk: a = 0")
    th = TWO_PI * (b * k + c)
    pre = cpow(k, s - 1) * cpow(TWO_PI, s) * cgamma(-s) / 2j
    v = pre * (_expi(th) * cpow(-1j * a, s) - _expi(-th) * cpow(1j * a, s))
    return _result(v, 1e-15 * abs(v))


def F_sk(case: IdentityCase, k: int) -> EvalResult:
    """F_{s,k} = f_{s,k} + g_{s,k}; for real a this is (1/k) int_d^inf sin(2pi(axk+bk+c)) x^(-s-1) dx.

    For real a the incomplete-gamma form is used, which stays accurate where
    f and g nearly cancel.
    """
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    if a.imag == 0 and a != 0:
        tp, ep = tail_k(s, a, b + c / k, d, k)
        tm, em = tail_k(s, -a, -b - c / k, d, k)
        return _result((tp - tm) / 2j, (ep + em) / 2, 2)
    f = f_sk(case, k)
    g = g_sk(s, a, b, c, k)
    return _result(f.value + g.value, f.abs_err + g.abs_err, f.terms + 1)


def F_pair(case: IdentityCase, k: int) -> EvalResult:
    """F_{s,k}(a,b,c+1/4,d) + i F_{s,k}(a,b,c,d) = (1/k) int_d^inf e^{i2pi(axk+bk+c)} x^(-s-1) dx."""
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    if a.imag >= 0 and a != 0:
        v, e = tail_k(s, a, b + c / k, d, k)
        return _result(v, e)
    p = F_sk(case.replace(c=c + 0.25), k)
    q = F_sk(case, k)
    return _result(p.value + 1j * q.value, p.abs_err + q.abs_err, 2)


def F_shift(case: IdentityCase, k: int, n: int) -> EvalResult:
    """The F pair through n integration-by-parts steps.

    -sum_{m<n} (s+1)_m e^{i2pi(adk+bk+c)} / ((i2pi adk)^(m+1) k d^s)
    + (s+1)_n/(i2pi ak)^n (pair at s+n).
    """
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    if a == 0:
        raise DomainError("F_shift: a = 0")
    if n < 0:
        raise DomainError("F_shift: n >= 0")
    if n == 0:
        return F_pair(case, k)
    ph = _expi(TWO_PI * (a * d * k + b * k + c))
    iz = 1j * TWO_PI * a * d * k
    acc = 0j
    for m in range(n):
        acc -= poch(s + 1, m) * ph / (iz ** (m + 1) * k * cpow(d, s))
    pn = poch(s + 1, n)
    if pn == 0:
        return _result(acc, 1e-15 * abs(acc), n)
    inner = F_pair(case.replace(s=s + n), k)
    rem = pn / (1j * TWO_PI * a * k) ** n
    return _result(acc + rem * inner.value, 1e-15 * abs(acc) + abs(rem) * inner.abs_err, n + 1)


def F_neg_int(n: int, a, b, d, k: int) -> complex:
    """F_{-n,k}(a,b,0,d) in closed form.

    -d^n sum_{m<n} (1-n)_m ((-i)^(m+2) e^{i2pi(ad+b)k} - i^(m+2) e^{-i2pi(ad+b)k})
    / (2 (2 pi a d)^(m+1) k^(m+2)).
    """
    a, b = complex(a), complex(b)
    th = TWO_PI * (a * d + b) * k
    acc = 0j
    for m in range(n):
        acc += (poch(1 - n, m) * ((-1j) ** (m + 2) * _expi(th) - (1j) ** (m + 2) * _expi(-th))
                / (2 * (TWO_PI * a * d) ** (m + 1) * k ** (m + 2)))
    return -d ** n * acc


# ---------------------------------------------------------------- k-tails

@dataclass(frozen=True)
class Piece:
    """term_k = coef * (1/k) int_lo^hi exp(i 2pi k (alpha x + phi)) x^(-s-1) dx."""
    coef: complex
    alpha: complex
    phi: complex
    lo: float
    hi: float


def _lerch_tail(z: complex, p: int, K: int) -> complex:
    """sum_{k>K} z^k / k^p for |z| <= 1."""
    if abs(z) < 1e-300:
        return 0j
    if K * math.log(max(abs(z), 1e-300)) < -745:
        return 0j
    zK = z ** K
    return zK * lerch_phi(p, z, float(K)).value


def _choose_n(s: complex, pieces, K: int):
    best = None
    n0 = max(1, int(math.floor(-s.real)) + 1)
    for n in range(n0, n0 + 40):
        if s.real + n <= 0:
            continue
        tot = 0.0
        for p in pieces:
            span = p.lo ** (-s.real - n) - (0.0 if math.isinf(p.hi) else p.hi ** (-s.real - n))
            tot += (abs(p.coef) * abs(poch(s + 1, n)) / (TWO_PI * abs(p.alpha)) ** n
                    * abs(span) / (s.real + n))
        tot *= zeta_h(n + 1, K + 1).real
        if best is None or tot < best[1]:
            best = (n, tot)
    return best


def k_tail(s, pieces, K: int):
    """sum_{k>K} of the pieces by the asymptotic endpoint expansion; returns (value, bound)."""
    s = complex(s)
    n, bound = _choose_n(s, pieces, K)
    total = 0j
    for p in pieces:
        alpha = complex(p.alpha)
        for m in range(n):
            cm = p.coef * poch(s + 1, m) / (1j * TWO_PI * alpha) ** (m + 1)
            for X, sgn in ((p.hi, 1.0), (p.lo, -1.0)):
                if math.isinf(X):
                    continue
                z = _expi(TWO_PI * (alpha * X + p.phi))
                if abs(z) > 1 + 1e-12:
                    raise ConvergenceError("k_tail: growing endpoint exponential")
                total += sgn * cm * cpow(X, -s - 1 - m) * _lerch_tail(z, m + 2, K)
    return total, bound


def _min_K(s: complex, pieces, n_guess: int = 12) -> int:
    lo = min(p.lo for p in pieces)
    al = min(abs(p.alpha) for p in pieces)
    return max(8, int(math.ceil(2.0 * (abs(s + 1) + n_guess) / (TWO_PI * al * lo))))


def sum_with_tail(s, term, pieces, tol: float = 1e-12, k_max: int = 4096):
    """sum_{k>=1} term(k) with the k > K remainder from :func:`k_tail`.

    ``term(k)`` returns (value, abs_err).  K doubles until the certified
    remainder bound is below tol.
    """
    s = complex(s)
    K = _min_K(s, pieces)
    if K > k_max:
        raise BudgetError(f"the k-tail expansion needs at least {K} terms (budget {k_max})")
    vals = []
    errs = 0.0
    k = 0
    while True:
        while k < K:
            k += 1
            v, e = term(k)
            vals.append(v)
            errs += e
        n, bound = _choose_n(s, pieces, K)
        if bound <= tol or K >= k_max:
            break
        K *= 2
    tail, bound = k_tail(s, pieces, K)
    head = complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    ok = bound <= tol
    return head + tail, errs + bound, K, ok


# ---------------------------------------------------------------- I_s series

def _sin_pieces(coef, alpha, phi, c, lo, hi=math.inf):
    """coef * (1/k) int sin(2pi(k(alpha x + phi) + c)) x^(-s-1) dx as two Pieces."""
    e = cmath.exp(1j * TWO_PI * c)
    return [Piece(coef * e / 2j, alpha, phi, lo, hi),
            Piece(-coef / (e * 2j), -alpha, -phi, lo, hi)]


def I_series_simple(case: IdentityCase, tol: float = 1e-12, k_max: int = 4096) -> EvalResult:
    """sum_k f_{s,k}(a,b,c,d) + g_{s,k}(a,b,c) for real a, b."""
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    if a.imag != 0 or b.imag != 0:
        raise RegimeError("I_series_simple needs real a and b")
    if a == 0:
        raise DomainError("I_series: Re a = 0")

    def term(k):
        r = F_sk(case, k)
        return r.value, r.abs_err

    pieces = _sin_pieces(1.0, a, b, c, d)
    v, err, K, ok = sum_with_tail(s, term, pieces, tol, k_max)
    return _result(v, err, K, ok)


def I_series_general(case: IdentityCase, tol: float = 1e-12, statement_rule: bool = False,
                     k_max: int = 4096) -> EvalResult:
    """The four-part series for complex a, b (Re a != 0).

    cos(2pi c) F(Re a, Re b, 0, d)
    + i d- sin(2pi c) (f(.., d) - 2 f(.., d+) - g)            [= F(d) - 2 F(d+)]
    + sin(2pi c) (1F1 head at d - 1F1 head at d+)
    + sin(2pi c) (1F1 at d+ + g(d- a, d- b, 1/4) + i g(d- a, d- b, 0))   [= tail at d+]
    """
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    if a.real == 0:
        raise DomainError("I_series: Re a = 0")
    plan = branch_plan(a, b, d, statement_rule=statement_rule)
    dp, dm = plan.d_plus, plan.d_minus
    ra, rb = a.real, b.real
    cc, sc = cmath.cos(TWO_PI * c), cmath.sin(TWO_PI * c)
    real_c = RealPart(s, ra, rb, d, dp)

    def term(k):
        v = 0j
        err = 0.0
        if cc != 0:
            F0 = real_c.F(k, d)
            v += cc * F0[0]
            err += abs(cc) * F0[1]
        if sc != 0:
            F0 = real_c.F(k, d)
            F1 = real_c.F(k, dp) if dp != d else F0
            v += 1j * dm * sc * (F0[0] - 2 * F1[0])
            err += abs(sc) * (F0[1] + 2 * F1[1])
            if dp != d:
                h1, e1 = head_k(s, -dm * a, -dm * b, d, k)
                h2, e2 = head_k(s, -dm * a, -dm * b, dp, k)
                v += sc * (h1 - h2)
                err += abs(sc) * (e1 + e2)
            t, et = tail_k(s, dm * a, dm * b, dp, k)
            v += sc * t
            err += abs(sc) * et
        return v, err

    pieces = []
    if cc != 0:
        pieces += _sin_pieces(cc, ra, rb, 0.0, d)
    if sc != 0:
        pieces += _sin_pieces(1j * dm * sc, ra, rb, 0.0, d)
        pieces += _sin_pieces(-2j * dm * sc, ra, rb, 0.0, dp)
        if dp != d:
            pieces.append(Piece(sc, -dm * a, -dm * b, d, dp))
        pieces.append(Piece(sc, dm * a, dm * b, dp, math.inf))
    v, err, K, ok = sum_with_tail(s, term, pieces, tol, k_max)
    return _result(v, err, K, ok)


class RealPart:
    """Cached F_{s,k}(Re a, Re b, 0, X) evaluations for the general path."""

    def __init__(self, s, ra, rb, d, dp):
        self.s, self.ra, self.rb = s, ra, rb
        self.cache = {}

    def F(self, k, X):
        key = (k, X)
        if key not in self.cache:
            r = F_sk(IdentityCase(self.s, self.ra, self.rb, 0.0, X), k)
            self.cache[key] = (r.value, r.abs_err)
        return self.cache[key]


def I_series(case: IdentityCase, tol: float = 1e-12, path: str = "auto", k_max: int = 4096) -> EvalResult:
    """Right-hand side of the I_s expansion; ``path`` in {auto, general, simple}."""
    if path not in ("auto", "general", "simple"):
        raise DomainError(f"I_series: unknown path {path!r}")
    real = case.a.imag == 0 and case.b.imag == 0
    if path == "simple" or (path == "auto" and real):
        return I_series_simple(case, tol, k_max)
    return I_series_general(case, tol, k_max=k_max)


# ---------------------------------------------------------------- closed k-sums

def g_total(s, a, b, c) -> complex:
    """sum_k g_{s,k}(a,b,c) through Li_{1-s}; continues the sum where it diverges."""
    s, a, b, c = complex(s), complex(a), complex(b), complex(c)
    if b.imag != 0:
        raise RegimeError("g_total needs real b")
    pre = cpow(TWO_PI, s) * cgamma(-s) / 2j
    e = cmath.exp(2j * math.pi * c)
    return pre * (e * cpow(-1j * a, s) * li(1 - s, cmath.exp(2j * math.pi * b))
                  - cpow(1j * a, s) / e * li(1 - s, cmath.exp(-2j * math.pi * b)))


def f_total(case: IdentityCase, tol: float = 1e-12) -> EvalResult:
    """sum_k f_{s,k}(a,b,c,d) = I_s - sum_k g_{s,k}; real a, b and Re s < 1 (Re s < 0 for b in Z)."""
    s = case.s
    if case.a.imag != 0 or case.b.imag != 0:
        raise RegimeError("f_total needs real a and b")
    lim = 0.0 if _is_int(case.b) else 1.0
    if not s.real < lim:
        raise RegimeError(f"sum of f_(s,k) converges only for Re s < {lim:g}")
    r = I_series(case, tol)
    g = g_total(s, case.a, case.b, case.c)
    return _result(r.value - g, r.abs_err + 1e-14 * abs(g), r.terms, r.converged)


def f1_total(case: IdentityCase, tol: float = 1e-12) -> complex:
    """sum_k f_{s,k,1}: the part of f even under (b, c) -> (-b, -c)."""
    p = f_total(case, tol).value
    m = f_total(case.replace(b=-case.b, c=-case.c), tol).value
    return 0.5 * (p + m)


def f2_total(case: IdentityCase, tol: float = 1e-12) -> complex:
    p = f_total(case, tol).value
    m = f_total(case.replace(b=-case.b, c=-case.c), tol).value
    return 0.5 * (p - m)


# ---------------------------------------------------------------- R, M, Theorem 1.1

def _r_pieces(s: complex, a: float, fb: float, d: float) -> list:
    # -s int_{xs}^d floor(ax+fb) x^(-s-1) dx; floor = j on [(j-fb)/a, (j+1-fb)/a)
    acc = []
    j = 1
    while True:
        lo = (j - fb) / a
        if lo >= d:
            break
        hi = min((j + 1 - fb) / a, d)
        acc.append(-j * (cpow(lo, -s) - cpow(hi, -s)))
        j += 1
    return acc


def _fsum_c(terms) -> complex:
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def R_remainder(s, a: float, b: float, d: float) -> EvalResult:
    """s (int_1^{(1-{b})/a} - int_1^d) floor(ax+{b}) x^(-s-1) dx, piecewise exact."""
    s = complex(s)
    a, b, d = float(a), float(b), float(d)
    if not a > 0:
        raise DomainError("R_remainder: a > 0 (map a < 0 through (-a, -b))")
    fb = frac(b).real
    if d <= (1.0 - fb) / a or s == 0:
        return _result(0j, 0.0, 0)
    acc = _r_pieces(s, a, fb, d)
    return _result(_fsum_c(acc), 1e-15 * sum(abs(z) for z in acc), len(acc))


def M_lhs(s, a: float, b: float, d: float, sign: str = "theorem") -> EvalResult:
    """Closed form of s int_d^inf (1/2 - {ax+b}) x^(-s-1) dx.

    a > 0: a^s zeta(s, 1-{b}) - (a d s/(s-1) + {b} - 1/2) d^(-s) + R_{a,b,d}(s);
    a < 0 mirrors through (-a, -b).  ``sign="lemma"`` flips a d s/(s-1) to
    a d s/(1-s) for comparison reports.
    """
    s = complex(s)
    a, b, d = float(a), float(b), float(d)
    if s == 1:
        raise PoleError(1, "M_lhs")
    if a == 0:
        raise DomainError("M_lhs: a != 0")
    if sign not in ("theorem", "lemma"):
        raise DomainError(f"M_lhs: unknown sign convention {sign!r}")
    if a < 0:
        r = M_lhs(s, -a, -b, d, sign)
        return _result(-r.value, r.abs_err, r.terms)
    fb = frac(b).real
    lin = a * d * s / (s - 1) if sign == "theorem" else a * d * s / (1 - s)
    x0 = 1.0 - fb
    if d <= x0 / a:
        z = hurwitz_em(s, x0)
        v = cpow(a, s) * z.value - (lin + fb - 0.5) * cpow(d, -s)
        return _result(v, abs(cpow(a, s)) * z.abs_err + 1e-15 * abs(v), z.terms)
    # the k = 0 term a^s x0^(-s) cancels the first jump of R exactly; drop both
    # (they blow up as {b} -> 1)
    z = hurwitz_em(s, x0 + 1.0)
    acc = _r_pieces(s, a, fb, d)
    acc[0] = cpow(min((1.0 + x0) / a, d), -s)
    acc += [cpow(a, s) * z.value, -(lin + fb - 0.5) * cpow(d, -s)]
    v = _fsum_c(acc)
    return _result(v, abs(cpow(a, s)) * z.abs_err + 1e-15 * sum(abs(w) for w in acc), z.terms)


def theorem1_sides(case: IdentityCase, identity: str = "principal", variant: str = "corrected"):
    """(lhs, rhs) of the two displayed fractional-part identities.

    principal: (pi/s) M_{a,b,d}(s) against sum_k f_{s,k}(a,b,0,d) + g_{s,k}(a,b,0).
    second:    -sum_k f_{s,k}(a,b,0,1) against (pi/s)(a s/(s-1) + {b} - 1/2 - R_{a,b,1}(s)).
               ``variant="printed"`` uses bare b and +R instead; the two agree
               when 0 <= b < 1 and a <= 1 - b (so that R = 0).
    """
    s, a, b, d = case.s, case.a.real, case.b.real, case.d
    if case.a.imag != 0 or case.b.imag != 0:
        raise RegimeError("Theorem 1.1 needs real a and b")
    if variant not in ("corrected", "printed"):
        raise DomainError(f"unknown variant {variant!r}")
    if identity == "principal":
        lhs = math.pi / s * M_lhs(s, a, b, d).value
        rhs = I_series(case.replace(c=0.0)).value
        return lhs, rhs
    if identity == "second":
        lhs = -f_total(case.replace(c=0.0, d=1.0)).value
        sg = 1 if a > 0 else -1
        A, B = a * sg, b * sg
        bb = frac(B).real if variant == "corrected" else B
        R = R_remainder(s, A, B, 1.0).value
        R = -R if variant == "corrected" else R
        rhs = sg * math.pi / s * (A * s / (s - 1) + bb - 0.5 + R)
        return lhs, rhs
    raise DomainError(f"unknown identity {identity!r}")


# ---------------------------------------------------------------- removable points

def circle_mean(f, s0, r: float = 1e-3, m: int = 4) -> complex:
    """Mean of f on m points of the circle |s - s0| = r (offset from the axes)."""
    pts = [s0 + r * cmath.exp(2j * math.pi * (j + 0.5) / m) for j in range(m)]
    vals = [complex(f(p)) for p in pts]
    return sum(vals) / m


def circle_derivative(f, s0, r: float = 1e-3, m: int = 4) -> complex:
    acc = 0j
    for j in range(m):
        w = cmath.exp(2j * math.pi * (j + 0.5) / m)
        acc += complex(f(s0 + r * w)) / w
    return acc / (m * r)


def _hurwitz_raw(s, b, a, d):
    s = complex(s)
    fb = frac(b).real
    I = I_series(IdentityCase(s, a, b, 0.0, d)).value
    v = s / math.pi * I + (a * d * s / (s - 1) + fb - 0.5) * cpow(d, -s) - R_remainder(s, a, b, d).value
    return v / cpow(a, s)


def hurwitz_continued(s, b: float, a: float = 1.0, d: float = 1.0) -> EvalResult:
    """zeta(s, 1-{b}) from the fractional-part expansion, for any s != 1."""
    s = complex(s)
    a, b, d = float(a), float(b), float(d)
    if a <= 0 or d <= 0:
        raise DomainError("hurwitz_continued: a, d > 0")
    if s == 1:
        raise PoleError(1, "zeta(s, x)")
    if abs(s) < 1e-6:
        v = circle_mean(lambda t: _hurwitz_raw(t, b, a, d), 0.0)
        err = 1e-11
    else:
        v = _hurwitz_raw(s, b, a, d)
        err = 1e-13 * (1 + abs(s))
    if s.imag == 0:
        v = complex(v.real, 0.0)  # real on the real axis; drop rounding residue
    return _result(v, err, 4)


def hurwitz_regular_at_one(b: float, a: float = 1.0, d: float = 1.0) -> EvalResult:
    """lim_{s->1} zeta(s, 1-{b}) + 1/(1-s)."""
    v = circle_mean(lambda t: _hurwitz_raw(t, b, a, d) + 1 / (1 - t), 1.0)
    return _result(v, 1e-10, 4)


def hurwitz_dzeta_at_zero(b: float, a: float = 1.0, d: float = 1.0) -> EvalResult:
    """(d/ds) zeta(s, 1-{b}) at s = 0."""
    v = circle_derivative(lambda t: _hurwitz_raw(t, b, a, d), 0.0)
    return _result(v, 1e-9, 4)


# ---------------------------------------------------------------- log-sine integrals

@dataclass(frozen=True)
class LogSinePlan:
    n0: int
    n1: int
    n2: int
    omega: int
    breakpoints: tuple = field(default_factory=tuple)


def _near_int(x: float, tol: float = 1e-12):
    return abs(x - round(x)) < tol


def _is_exact_int(z: complex) -> bool:
    return z.imag == 0 and z.real == math.floor(z.real)


def _omega(a: complex, b: complex, real_value: int) -> int:
    if a.real == 0:
        return 0
    sa = 1 if a.real > 0 else -1
    if a.imag != 0:
        return sa * (1 if a.imag > 0 else -1)
    if b.imag != 0:
        return sa * (1 if b.imag > 0 else -1)
    return real_value


def _sign_change(a: complex, b: complex, beta: float, ar: float, lo_n: int, hi_n: int):
    def sg(n):
        return sgn2(a.imag * (n - beta) / ar + b.imag)

    if a.imag != 0:
        ns = beta + ar * (-b.imag / a.imag)
        lo_n, hi_n = min(lo_n, math.floor(ns) - 2), max(hi_n, math.ceil(ns) + 2)
    for n in range(lo_n, hi_n + 1):
        if sg(n) != sg(n + 1):
            return n
    return None


def logsine_plan_finite(case: IdentityCase) -> LogSinePlan:
    """Breakpoints of Re(ax+b) in Z on (0, d) and the sign-change index n0."""
    a, b, d = case.a, case.b, case.d
    if a.real == 0:
        return LogSinePlan(0, 1, 0, 0, ())
    sa = 1 if a.real > 0 else -1
    beta, ar = b.real * sa, abs(a.real)
    n1 = math.floor(beta) + 1
    n2 = math.ceil(beta + ar * d) - 1
    if (n2 - beta) / ar >= d:
        n2 -= 1
    if n1 > n2:
        n1, n2 = 1, 0
    n0 = None
    if n1 <= n2:
        n0 = _sign_change(a, b, beta, ar, n1 - 1, n2 + 1)
    if n0 is None or n0 < n1:
        n0 = n1 - 1
    n0 = min(n0, n2) if n1 <= n2 else n0
    bps = tuple((m - beta) / ar for m in range(n1, n2 + 1))
    return LogSinePlan(n0, n1, n2, _omega(a, b, -1), bps)


def logsine_plan_tail(case: IdentityCase) -> LogSinePlan:
    """n: first breakpoint index beyond d; n0 for the tail (n1 = n, n2 unbounded -> encoded n2 = n - 1)."""
    a, b, d = case.a, case.b, case.d
    sa = 1 if a.real > 0 else -1
    beta, ar = b.real * sa, abs(a.real)
    n = math.floor(beta + d * ar) + 1
    n0 = None
    if a.imag != 0 or b.imag != 0:
        n0 = _sign_change(a, b, beta, ar, n - 1, n + 2)
    if n0 is None or n0 < n:
        n0 = n - 1
    return LogSinePlan(n0, n, n - 1, _omega(a, b, 1), ())


def sym_2f1_sum(s, A, b, exclude=(), side: int = -1):
    """sum over k in Z (symmetric) of 2F1(1, 1-s; 2-s; -A/(b-k)) / (b-k).

    |k| <= K directly; beyond, the 2F1 is expanded in A/(b-k) and the moment
    sums of (b-k)^(-m) are Hurwitz zeta tails (digamma for m = 1).  Returns
    (value, abs_err).
    """
    s, A, b = complex(s), complex(A), complex(b)
    K = int(math.ceil(4 * abs(A) + abs(b) + 16))
    excl = set(int(k) for k in exclude)
    terms = []
    for k in range(-K, K + 1):
        if k in excl:
            continue
        z = -A / (b - k)
        on_cut = z.imag == 0 and z.real > 1
        r = f2f1(1, 1 - s, 2 - s, z, side=side if on_cut else 0)
        terms.append(r.value / (b - k))
    head = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    q = abs(A) / (K + 1 - abs(b))
    tail = 0j
    last = 0.0
    for n in range(0, 400):
        m = n + 1
        if m == 1:
            T = cdigamma(K + 1 - b) - cdigamma(K + 1 + b)
        else:
            T = (-1) ** m * zeta_h(m, K + 1 - b) + zeta_h(m, K + 1 + b)
        t = (1 - s) / (1 - s + n) * (-A) ** n * T
        tail += t
        last = abs(t)
        if n > 2 and q ** n < 1e-18:
            break
    err = 1e-15 * sum(abs(t) for t in terms) + last + 1e-16 * abs(tail)
    return head + tail, err


def _branch_power(z: complex, s: complex) -> complex:
    """z^s with the conjugated branch on (-1, 0) and the principal branch elsewhere."""
    if z.imag == 0 and -1 < z.real < 0:
        return cpow(z.conjugate(), s.conjugate()).conjugate()
    return cpow(z, s)


def _power_sum(s: complex, A: float, b: float, exclude=()) -> complex:
    """sum over k in Z of the branch power (A/(b-k))^s, Re s > 1, real A and b."""
    K = int(math.ceil(4 * abs(A) + abs(b) + 16))
    excl = set(int(k) for k in exclude)
    acc = 0j
    for k in range(-K, K + 1):
        if k in excl:
            continue
        acc += _branch_power(complex(A / (b - k)), s)
    em = cmath.exp(-1j * math.pi * s)
    up, down = zeta_h(s, K + 1 - b), zeta_h(s, K + 1 + b)
    if A > 0:
        acc += abs(A) ** s * (em * up + down)
    else:
        acc += abs(A) ** s * (up + em * down)
    return acc


def _check_breaks(x: complex, what: str):
    fr = x.real - math.floor(x.real)
    near = min(fr, 1 - fr) < 1e-12
    if near and not _is_exact_int(complex(round(x.real), x.imag)) or (near and fr != 0):
        raise BranchError(f"breakpoint within 1e-12 of {what}; perturb d")


def logsine_mellin_finite(case: IdentityCase) -> EvalResult:
    """int_0^d Log(4 sin^2(pi(ax+b))) x^(-s-1) dx for Re s < 0 (principal Log)."""
    s, a, b, d = case.s, case.a, case.b, case.d
    if not s.real < 0:
        raise RegimeError("finite log-sine transform needs Re s < 0")
    w = a * d + b
    if _is_exact_int(w) and a == 0:
        raise RegimeError("ad + b in Z needs a != 0")
    for x, what in ((b, "x = 0"), (w, "x = d")):
        fr = x.real - math.floor(x.real)
        if 0 < min(fr, 1 - fr) < 1e-12:
            raise BranchError(f"breakpoint within 1e-12 of {what}; perturb d")
    if a.real == 0:
        raise RegimeError("finite log-sine transform needs Re a != 0")
    plan = logsine_plan_finite(case)
    sa = 1 if a.real > 0 else -1
    beta, ar = b.real * sa, abs(a.real)
    om = plan.omega
    sd = s * cpow(d, s)
    tot = []
    w_re_int = w.real == math.floor(w.real)
    if not w_re_int:
        tot.append(-plog(cmath.sin(math.pi * w) ** 2) / sd)
    elif w.imag != 0:
        tot.append(-(plog(cmath.sin(math.pi * w) ** 2) - (2j * math.pi if om == 1 else 0)) / sd)
    tot.append(-2 * math.log(2) / sd)
    if _is_exact_int(w):
        tot.append(2 / sd * (EULER_GAMMA + cdigamma(1 - s) - 0.5 * plog((math.pi * a * d) ** 2)))
    if _is_exact_int(b):
        tot.append(-2 / (s * s * cpow(d, s)))
    if plan.n1 <= plan.n2:
        Z = lambda x: zeta_h(s, x)
        pre = om * 2j * math.pi / s * cpow(ar, s)
        tot.append(-pre * (Z(plan.n1 - beta) - Z(plan.n0 + 1 - beta)))
        tot.append(pre * (Z(plan.n0 + 1 - beta) - Z(plan.n2 + 1 - beta)))
    excl = []
    if _is_exact_int(b):
        excl.append(int(b.real))
    if _is_exact_int(w):
        excl.append(int(w.real))
    S, e = sym_2f1_sum(s, a * d, b, excl, side=-1)
    pre = 2 * a / cpow(d, s - 1) / (s * (1 - s))
    tot.append(pre * S)
    v = sum(tot)
    return _result(v, abs(pre) * e + 1e-14 * sum(abs(t) for t in tot), len(tot))


def _tail_raw(s: complex, a: float, b: float, d: float, variant: str = "statement") -> complex:
    sa = 1 if a > 0 else -1
    beta, ar = b * sa, abs(a)
    n = math.floor(beta + d * ar) + 1
    w = a * d + b
    sd = s * cpow(d, s)
    tot = []
    wint = w == math.floor(w)
    if not wint:
        tot.append(math.log(math.sin(math.pi * w) ** 2) / sd)
    tot.append(2 * math.log(2) / sd)
    if wint:
        tot.append(2 / sd * (1 / s - cdigamma(1 + s) - EULER_GAMMA + 0.5 * math.log((math.pi * a * d) ** 2)))
    if b == math.floor(b):
        tot.append(2 / (s * s * cpow(d, s)))
    n0 = n - 1
    if variant == "statement":
        tot.append(2j * math.pi / s * cpow(ar, s) * (2 * zeta_h(s, n0 + 1 - beta) - zeta_h(s, n - beta)))
    else:
        tot.append(2j * math.pi / s * cpow(ar, s) * (2 * zeta_h(s, n0 - beta) - zeta_h(s, n + 1 - beta)))
    excl = []
    if b == math.floor(b):
        excl.append(int(b))
    if wint:
        excl.append(int(w))
    A = a * d
    S, _ = sym_2f1_sum(s, A, b, excl, side=-1)
    P = _power_sum(s, A, b, excl)
    tot.append(-2 / cpow(d, s) * (A / (s * (1 - s)) * S - math.pi / (s * cmath.sin(math.pi * s)) * P))
    return sum(tot)


def logsine_mellin_tail(case: IdentityCase, variant: str = "statement") -> EvalResult:
    """int_d^inf log(4 sin^2(pi(ax+b))) x^(-s-1) dx for Re s > 1 and real a, b.

    At integer s the 2F1 parameter pole cancels against 1/sin(pi s); the value
    there is the mean over a small circle.
    """
    s, a, b, d = case.s, case.a, case.b, case.d
    if not s.real > 1:
        raise RegimeError("tail log-sine transform needs Re s > 1")
    if a.imag != 0 or b.imag != 0 or a.real == 0:
        raise RegimeError("tail log-sine transform is implemented for real a != 0 and real b")
    a, b = a.real, b.real
    for x, what in ((b, "x = 0"), (a * d + b, "x = d")):
        fr = x - math.floor(x)
        if 0 < min(fr, 1 - fr) < 1e-12:
            raise BranchError(f"breakpoint within 1e-12 of {what}; perturb d")
    if _is_int(s):
        v = circle_mean(lambda t: _tail_raw(t, a, b, d, variant), s)
        return _result(v, 1e-10 * (1 + abs(v)), 4)
    v = _tail_raw(s, a, b, d, variant)
    return _result(v, 1e-13 * (1 + abs(v)), 1)


def H_lhs(s, a: float, b: float, d: float, variant: str = "corrected") -> EvalResult:
    """H_{a,b,d}(s) of the log-sine identity.

    ``variant="printed"`` keeps -(psi(1+s) - gamma) in the ad+b in Z term and
    omits the k = ad+b power term; ``"corrected"`` uses -(psi(1+s) + gamma)
    and adds -pi e^{i pi s}/(s d^s sin(pi s)) when ad+b in Z.
    """
    s = complex(s)
    a, b, d = float(a), float(b), float(d)
    if a == 0:
        raise DomainError("H_lhs: a != 0")
    if _is_int(s):
        raise PoleError(s, "H_{a,b,d}")
    if variant not in ("corrected", "printed"):
        raise DomainError(f"H_lhs: unknown variant {variant!r}")
    sa = 1 if a > 0 else -1
    bs, ar = b * sa, abs(a)
    n = math.floor(ar * d + bs) + 1
    w = a * d + b
    sd = s * cpow(d, s)
    wint = w == math.floor(w)
    bint = b == math.floor(b)
    t = [math.log(2) / sd]
    if not wint:
        t.append(math.log(math.sin(math.pi * w) ** 2) / (2 * sd))
    if bint:
        t.append(1 / (s * s * cpow(d, s)))
    if wint:
        g = EULER_GAMMA if variant == "corrected" else -EULER_GAMMA
        t.append((1 / sd) * (1 / s - cdigamma(1 + s) - g + 0.5 * math.log((math.pi * a * d) ** 2)))
        if variant == "corrected":
            t.append(-math.pi * cmath.exp(1j * math.pi * s) / (sd * cmath.sin(math.pi * s)))
    excl = []
    if bint:
        excl.append(int(b))
    if wint:
        excl.append(int(w))
    A = a * d
    S, e = sym_2f1_sum(s, A, b, excl, side=-1)
    t.append(-(1 / cpow(d, s)) * A / (s * (1 - s)) * S)
    fb = frac(bs).real
    t.append(1j * math.pi * cpow(ar, s) / s * (zeta_h(s, 1 - fb) - zeta_h(s, n - bs)))
    v = sum(t)
    return _result(v, abs(A / (s * (1 - s))) * e + 1e-14 * sum(abs(x) for x in t), len(t))


def theorem2_sides(case: IdentityCase, identity: str = "principal", variant: str = "corrected"):
    """(lhs, rhs) of the log-sine identities.

    principal: H + (pi |a|^s / s)(zeta(s,1-{-b sgn a})/sin(pi s) + zeta(s,1-{b sgn a})/tan(pi s))
               against -sum_k f_{s,k}(a,b,1/4,d) + g_{s,k}(a,b,1/4).
    second:    sum_k f_{s,k}(a,b,1/4,1) against -H_{a,b,1}(s).
    """
    s, a, b, d = case.s, case.a.real, case.b.real, case.d
    if case.a.imag != 0 or case.b.imag != 0:
        raise RegimeError("Theorem 1.2 needs real a and b")
    if identity == "principal":
        sa = 1 if a > 0 else -1
        bs = b * sa
        H = H_lhs(s, a, b, d, variant).value
        zm = zeta_h(s, 1 - frac(-bs).real)
        zp = zeta_h(s, 1 - frac(bs).real)
        lhs = H + math.pi * cpow(abs(a), s) / s * (zm / cmath.sin(math.pi * s) + zp / cmath.tan(math.pi * s))
        rhs = -I_series(case.replace(c=0.25)).value
        return lhs, rhs
    if identity == "second":
        lhs = f_total(case.replace(c=0.25, d=1.0)).value
        rhs = -H_lhs(s, a, b, 1.0, variant).value
        return lhs, rhs
    raise DomainError(f"unknown identity {identity!r}")


# ---------------------------------------------------------------- negative integers

def zeta_neg_recurrence(n: int, a: float, b: float, d: float):
    """Both sides of the s = -n evaluation; returns (lhs, rhs).

    lhs = (pi/n) M_{a,b,d}(-n), i.e. for a > 0
          (pi/n)(a^(-n) zeta(-n, 1-{b}) - (a d n/(n+1) + {b} - 1/2) d^n + R_{a,b,d}(-n))
    rhs = d^n sum_{m=1}^n (1-n)_{m-1}/(2 (2 pi a d)^m)
          ((-i)^(m+1) Li_{m+1}(e^{i th}) + i^(m+1) Li_{m+1}(e^{-i th})),  th = 2 pi (ad+b)
    """
    if n < 1:
        raise DomainError("zeta_neg_recurrence: n >= 1")
    a, b, d = float(a), float(b), float(d)
    if a == 0:
        raise DomainError("zeta_neg_recurrence: a != 0")
    lhs = -math.pi / (-n) * M_lhs(-n, a, b, d).value
    th = TWO_PI * (a * d + b)
    acc = 0j
    for m in range(1, n + 1):
        acc += (poch(1 - n, m - 1) / (2 * (TWO_PI * a * d) ** m)
                * ((-1j) ** (m + 1) * li(m + 1, cmath.exp(1j * th))
                   + (1j) ** (m + 1) * li(m + 1, cmath.exp(-1j * th))))
    return lhs, d ** n * acc


def ls_closed(n: int, a: float, b: float, d: float) -> EvalResult:
    """-1/2 int_0^d log(4 sin^2(pi(ax+b))) x^(n-1) dx through polylogarithms."""
    if n < 1:
        raise DomainError("ls_closed: n >= 1")
    a, b, d = float(a), float(b), float(d)
    if a == 0:
        raise DomainError("ls_closed: a != 0")
    eb = cmath.exp(2j * math.pi * b)
    th = TWO_PI * (a * d + b)
    head = (math.gamma(n) / (2 * a ** n * TWO_PI ** n)
            * ((1j) ** n * li(n + 1, eb) + (-1j) ** n * li(n + 1, eb.conjugate())))
    acc = 0j
    for m in range(1, n + 1):
        acc += (poch(1 - n, m - 1) / (2 * (TWO_PI * a * d) ** m)
                * ((-1j) ** m * li(m + 1, cmath.exp(1j * th)) + (1j) ** m * li(m + 1, cmath.exp(-1j * th))))
    v = head + d ** n * acc
    return _result(v, 1e-14 * (abs(head) + abs(d ** n * acc)), n)


# ---------------------------------------------------------------- convergence bounds

def h_sk(s, a, b, k: int) -> float:
    s = complex(s)
    a, b = complex(a), complex(b)
    if s.real == -1:
        raise RegimeError("h_{s,k} needs Re s != -1")
    z = math.exp(TWO_PI * b.imag)
    A = TWO_PI * abs(a)
    v = 2 * (s + 1) * (lerch_phi(2, z, k).value / (A * (1 + s.real))
                       - lerch_phi(1 - s.real, z, k).value / (A ** (-s.real) * (1 + s.real)))
    return v


def h_bound(case: IdentityCase, tb: TailBoundParams | None = None) -> float:
    """h_s(a, b, d) with k0 from ``tb`` (computed when omitted); needs Re s < 0.

    The exponent e^{2 pi k Im b} inside the polylogarithms is read with k = 1.
    """
    s, a, b, d = case.s, case.a, case.b, case.d
    if not s.real < 0:
        raise RegimeError("h_s needs Re s < 0")
    if a == 0:
        raise DomainError("h_s needs a != 0")
    tb = tb or tail_params(s, a)
    A = TWO_PI * abs(a)
    zb = math.exp(TWO_PI * b.imag)
    zw = math.exp(TWO_PI * (a * d + b).imag)
    if zb > 1 or zw > 1:
        raise RegimeError("h_s needs Im b <= 0 and Im(ad+b) <= 0")
    v = (abs(li(2, zw)) + abs(li(2, zb))) / (A * d)
    v += abs(s + 1) * (1 - math.e ** d) / (d * s.real) * abs(li(1 - s.real, zb)) * A ** s.real
    hk0, h1 = h_sk(s, a, b, tb.k0), h_sk(s, a, b, 1)
    v += (abs(hk0) + abs(hk0 - h1)) / d
    return float(v)


@dataclass(frozen=True)
class BoundCheck:
    label: str
    bound: float
    partial: float
    tail: float
    K: int

    @property
    def empirical(self) -> float:
        return self.partial + self.tail

    @property
    def margin(self) -> float:
        return self.bound - self.empirical


def _abs_sum(term, K: int, p: float, q: float = 1.0) -> tuple:
    """sum_{k<=K} |term(k)| and a safety-10 tail estimate for terms ~ q^k k^(-p)."""
    vals = [abs(term(k)) for k in range(1, K + 1)]
    part = math.fsum(vals)
    if q < 1 - 1e-12:
        tail = 10 * vals[-1] * q / (1 - q)
    else:
        C = max(v * k ** p for k, v in zip(range(K // 2, K + 1), vals[K // 2 - 1:]))
        tail = 10 * C * zeta_h(p, K + 1).real
    return part, tail


def _d_plus_minus(case: IdentityCase):
    pl = case.plan
    return pl.d_minus, pl.d_plus


def bound_checks(case: IdentityCase, items=("V", "VI", "VII", "VIII", "IX"), K: int = 2000,
                 x: float | None = None) -> dict:
    """Compare the bounds of the convergence theorem with truncated absolute sums.

    Items V-VII need Re s < 0 and are skipped outside that regime; VIII and IX
    hold for every s.  ``x`` is the cut point in (d, d+) for item VII when
    Im a != 0 (the midpoint by default).
    """
    s, a, b, c, d = case.s, case.a, case.b, case.c, case.d
    dm, dp = _d_plus_minus(case)
    out = {}
    neg = s.real < 0
    p_alg = min(1 - s.real, 2.0)
    if neg and ("V" in items or "VI" in items):
        rc = IdentityCase(s, a.real, b.real, c, d)
        hb = h_bound(rc.replace(c=0.0))
        bnd = 2 * math.cosh(c.imag) * hb
        scale = abs(cpow(d, 1 + s))
        for lab, fn in (("V", f_sk1), ("VI", f_sk2)):
            if lab in items:
                part, tail = _abs_sum(lambda k: scale * fn(rc, k).value, K, p_alg)
                out[lab] = BoundCheck(lab, bnd, part, tail, K)
    if neg and "VII" in items:
        if a.imag != 0 and dp > d:
            xx = x if x is not None else 0.5 * (d + min(dp, 2 * d + 1))
            hb = h_bound(IdentityCase(s, dm * a, dm * b, 0, xx))
            term = lambda k: cpow(xx, s) * head_k(s, -dm * a, -dm * b, xx, k)[0]
        elif a.imag == 0:
            hb = h_bound(IdentityCase(s, -dm * a, -dm * b, 0, d))
            term = lambda k: cpow(d, s) * head_k(s, dm * a, dm * b, d, k)[0]
        else:
            term = None
        if term is not None:
            part, tail = _abs_sum(term, K, p_alg)
            out["VII"] = BoundCheck("VII", hb, part, tail, K)
    if "VIII" in items:
        A = abs(a)
        e = lambda k: cmath.exp(-2j * math.pi * dm * a * (d - dp) * k)
        sup = max(abs(1 / cpow(dp, s + 1) - e(k) / cpow(d, s + 1)) for k in range(1, K + 1))
        sup = max(sup, abs(1 / cpow(dp, s + 1)))
        bnd = (math.pi ** 2 / 6) / (TWO_PI * A) * (
            sup + abs(s + 1) / abs(1 + s.real) * abs(cpow(d, -s - 1) - cpow(dp, -s - 1)))
        if dp == d:
            out["VIII"] = BoundCheck("VIII", bnd, 0.0, 0.0, 0)
        else:
            term = lambda k: (head_k(s, -dm * a, -dm * b, d, k)[0]
                              - head_k(s, -dm * a, -dm * b, dp, k)[0])
            part, tail = _abs_sum(term, K, 2.0)
            out["VIII"] = BoundCheck("VIII", bnd, part, tail, K)
    if "IX" in items:
        n = max(1, math.floor(-s.real) + 1)
        q = math.exp(-TWO_PI * dm * (a * dp + b).imag)
        A = TWO_PI * abs(a)
        if q >= 1:
            bnd = math.inf
        else:
            bnd = sum(abs(poch(s + 1, m)) * li(m + 1, q).real / (A ** (m + 1) * d ** (s.real + m + 1))
                      for m in range(n))
            bnd += abs(poch(s + 1, n)) * li(n + 1, q).real / (A ** n * d ** (s.real + n) * (s.real + n))
        # head + g(1/4) + i g(0) collapses to the tail integral; summing the
        # three pieces separately overflows once e^{2 pi k |Im b|} is large
        term = lambda k: tail_k(s, dm * a, dm * b, dp, k)[0]
        part, tail = _abs_sum(term, K, 2.0, q if q < 1 else 1.0)
        out["IX"] = BoundCheck("IX", bnd, part, tail, K)
    return out


def limit_residual(case: IdentityCase, tol: float = 1e-14) -> float:
    """|I(a,b,1/4,d) + i I(a,b,0,d)|, which vanishes as d Im a + Im b grows."""
    r1 = I_series(case.replace(c=0.25), tol, path="general").value
    r0 = I_series(case.replace(c=0.0), tol, path="general").value
    return abs(r1 + 1j * r0)
