"""Classical special functions: gamma, digamma, Hurwitz zeta, Lerch sums.

Every public operation returns an :class:`EvalResult`.  The underscore
helpers (``cgamma``, ``zeta_h`` ...) return bare complex numbers and are
what the other modules call in their inner loops.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _de
from .branchc import cpow, plog
from .errors import ConvergenceError, DomainError, PoleError

EULER_GAMMA = 0.57721566490153286061
LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)

# B_0 .. B_18 (odd ones beyond B_1 vanish)
BERNOULLI = {
    0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
    6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66),
    12: Fraction(-691, 2730), 14: Fraction(7, 6), 16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
}

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
)


@dataclass(frozen=True)
class SeriesControl:
    tol: float = 1e-12
    max_terms: int = 1_000_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("SeriesControl.tol must be positive")
        if self.max_terms < 1 or self.consecutive_small < 1:
            raise DomainError("SeriesControl counts must be >= 1")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_err: float
    terms: int
    converged: bool


def _is_nonpos_int(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _lanczos_log(z: complex) -> complex:
    # log Gamma(z) for Re z >= 1/2, up to a multiple of 2*pi*i
    z -= 1.0
    x = _LANCZOS[0]
    for i in range(1, 9):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def loggamma(z) -> complex:
    """A logarithm of Gamma(z) (not necessarily the principal one)."""
    z = complex(z)
    if _is_nonpos_int(z):
        raise PoleError(z, "loggamma")
    if z.real < 0.5:
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _lanczos_log(1.0 - z)
    return _lanczos_log(z)


def cgamma(z) -> complex:
    z = complex(z)
    if _is_nonpos_int(z):
        raise PoleError(z, "gamma")
    if z.imag == 0.0 and z.real == math.floor(z.real) and z.real <= 23:
        return complex(math.factorial(int(z.real) - 1))
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * cgamma(1.0 - z))
    try:
        return cmath.exp(_lanczos_log(z))
    except OverflowError as exc:
        raise DomainError(f"gamma overflow at {z}") from exc


def rgamma(z) -> complex:
    """1/Gamma(z), zero at the poles."""
    z = complex(z)
    if _is_nonpos_int(z):
        return 0j
    return 1.0 / cgamma(z)


def cdigamma(z) -> complex:
    z = complex(z)
    if _is_nonpos_int(z):
        raise PoleError(z, "digamma")
    if z.real < 0.5:
        return cdigamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0j
    while abs(z) < 12.0 or z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    zi2 = 1.0 / (z * z)
    s = 0j
    p = zi2
    for k in range(2, 19, 2):
        s += float(BERNOULLI[k]) / k * p
        p *= zi2
    return acc + cmath.log(z) - 0.5 / z - s


def poch(x, n: int) -> complex:
    """Rising factorial (x)_n; direct product up to n = 64, gamma ratio above."""
    x = complex(x)
    if n < 0:
        raise DomainError("poch: negative order")
    if n <= 64:
        p = 1 + 0j
        for j in range(n):
            p *= x + j
        return p
    if _is_nonpos_int(x) and x.real + n > 0:
        return 0j
    if _is_nonpos_int(x + n):
        return poch(x, 64) * poch(x + 64, n - 64)
    return cmath.exp(loggamma(x + n) - loggamma(x))


def gamma(z) -> EvalResult:
    v = cgamma(z)
    return EvalResult(v, 4e-15 * abs(v), 9, True)


def digamma(z) -> EvalResult:
    v = cdigamma(z)
    return EvalResult(v, 1e-15 * max(1.0, abs(v)), 9, True)


def _check_x(x: complex):
    if _is_nonpos_int(x):
        raise PoleError(x, "Hurwitz zeta shift")


def hurwitz_series(s, x, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Direct sum of (k+x)^(-s) with a midpoint-integral tail.

    The tail beyond N terms is approximated by the integral of (t+x)^(-s)
    over (N - 1/2, inf) with its first midpoint correction; ``abs_err`` is
    twice the size of the next correction term.
    """
    s = complex(s)
    x = complex(x)
    if not s.real > 1:
        raise DomainError("hurwitz_series needs Re s > 1; use hurwitz_em")
    _check_x(x)
    re_acc, im_acc = [], []
    n = 0
    block = 256
    while True:
        k = np.arange(n, n + block, dtype=float) + x
        terms = np.exp(-s * np.log(k.astype(complex)))
        re_acc.append(math.fsum(terms.real))
        im_acc.append(math.fsum(terms.imag))
        n += block
        base = n - 0.5 + x
        # midpoint rule on the tail plus its first correction
        tail = cpow(base, 1.0 - s) / (s - 1.0) - s * cpow(base, -s - 1.0) / 24.0
        err = 2.0 * 7.0 / 5760.0 * abs(s * (s + 1) * (s + 2)) * abs(cpow(base, -s - 3.0))
        total = complex(math.fsum(re_acc), math.fsum(im_acc)) + tail
        if err <= ctl.tol * max(abs(total), 1e-300):
            return EvalResult(total, err, n, True)
        if n >= ctl.max_terms:
            return EvalResult(total, err, n, False)
        block = min(2 * block, 65536)


def _em_tail_terms(s: complex, y: complex, p: int):
    # Euler-Maclaurin correction sum_{j<=p} B_2j/(2j)! (s)_{2j-1} y^{-s-2j+1}
    out = []
    poch_s = s
    ypow = cpow(y, -s - 1.0)
    y2 = 1.0 / (y * y)
    for j in range(1, p + 1):
        out.append(float(BERNOULLI[2 * j]) / math.factorial(2 * j) * poch_s * ypow)
        poch_s *= (s + 2 * j - 1) * (s + 2 * j)
        ypow *= y2
    return out


def zeta_h(s, x=1.0) -> complex:
    return _hurwitz_em(complex(s), complex(x))[0]


def _hurwitz_em(s: complex, x: complex):
    if s == 1:
        raise PoleError(1, "Hurwitz zeta")
    _check_x(x)
    if x.real <= 0:
        # shift into the right half plane: zeta(s,x) = x^-s + zeta(s,x+1)
        m = int(math.floor(-x.real)) + 1
        head = sum(cpow(x + j, -s) for j in range(m))
        v, e, t = _hurwitz_em(s, x + m)
        return head + v, e, t + m
    # The shift N trades the Bernoulli remainder against cancellation in the
    # head sum (severe for Re s < 0), so pick the N minimising their sum.
    best = None
    n_min = max(2, int(math.ceil(0.3 * abs(s))))
    n = n_min
    while n <= 5000:
        y = n + x
        corr = _em_tail_terms(s, y, 9)
        k = np.arange(n, dtype=float) + x
        terms = np.exp(-s * np.log(k.astype(complex)))
        main = cpow(y, 1.0 - s) / (s - 1.0)
        rounding = 2.2e-16 * (float(np.sum(np.abs(terms))) + abs(main)
                              + sum(abs(c) for c in corr))
        err = abs(corr[-1]) + rounding
        if best is None or err < best[0]:
            best = (err, n, terms, y, corr, main)
        elif abs(corr[-1]) < rounding:
            break
        n = int(n * 1.25) + 1
    err, n, terms, y, corr, main = best
    head = complex(math.fsum(terms.real), math.fsum(terms.imag))
    tail = main + 0.5 * cpow(y, -s) + sum(corr[:-1])
    return head + tail, err, n


def hurwitz_em(s, x) -> EvalResult:
    """Hurwitz zeta by Euler-Maclaurin summation.

    Bernoulli corrections run through B16 (B18 serves as the error term) and
    the shift is chosen to balance truncation against cancellation.
    """
    v, err, n = _hurwitz_em(complex(s), complex(x))
    return EvalResult(v, err, n, True)


def zeta(s) -> complex:
    return zeta_h(s, 1.0)


def _lerch_series(s: complex, z: complex, x: complex, ctl: SeriesControl):
    if z == 0:
        return 0j, 0.0, 0, True
    re_acc = []
    im_acc = []
    small = 0
    zk = 1 + 0j
    for k in range(1, ctl.max_terms + 1):
        zk *= z
        t = zk * cpow(k + x, -s)
        re_acc.append(t.real)
        im_acc.append(t.imag)
        if k % 64 == 0:
            total = complex(math.fsum(re_acc), math.fsum(im_acc))
            re_acc = [total.real]
            im_acc = [total.imag]
        if abs(t) <= ctl.tol * 1e-3 * max(abs(complex(sum(re_acc), sum(im_acc))), 1e-300):
            small += 1
            if small >= ctl.consecutive_small:
                az = abs(z)
                # ratio-test tail bound for an eventually geometric series
                tail = abs(t) * az / (1 - az) if az < 1 else abs(t) * k
                total = complex(math.fsum(re_acc), math.fsum(im_acc))
                return total, tail, k, True
        else:
            small = 0
    total = complex(math.fsum(re_acc), math.fsum(im_acc))
    return total, float("inf"), ctl.max_terms, False


def _lerch_integral(s: complex, z: complex, x: complex, tol: float):
    # Phi = 1/Gamma(s) int_0^inf t^(s-1) e^(-x t) z e^(-t) / (1 - z e^(-t)) dt
    def f(t):
        e = np.exp(-t)
        return np.exp((s - 1.0) * np.log(t) - x * t) * z * e / (1.0 - z * e)

    prev = None
    total = 0j
    evals = 0
    for level in range(0, 9):
        xs, ws = _de.exp_sinh_level(level)
        contrib = complex(np.sum(ws * f(xs)))
        evals += xs.size
        h = 2.0 ** (-level)
        total = total + contrib if level else contrib
        est = total * h
        if prev is not None:
            err = abs(est - prev)
            if err <= tol * max(abs(est), 1e-300) and level >= 4:
                g = rgamma(s)
                return est * g, err * abs(g), evals, True
        prev = est
    g = rgamma(s)
    return prev * g, err * abs(g), evals, False


def _lerch_jonquiere(s: complex, z: complex):
    # Li_s(z) = Gamma(1-s)/(2 pi)^(1-s) [i^(1-s) zeta(1-s, 1/2 + L) + i^(s-1) zeta(1-s, 1/2 - L)]
    # with L = log(-z) / (2 pi i); valid off (0, 1] and for s not a positive integer
    ell = plog(-z) / (2j * math.pi)
    g = cgamma(1.0 - s) / cpow(2 * math.pi, 1.0 - s)
    return g * (cpow(1j, 1.0 - s) * zeta_h(1.0 - s, 0.5 + ell)
                + cpow(1j, s - 1.0) * zeta_h(1.0 - s, 0.5 - ell))


def lerch_phi(s, z, x=0.0, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Phi_s(z, x) = sum_{k>=1} z^k (k+x)^(-s) for |z| <= 1."""
    s = complex(s)
    z = complex(z)
    x = complex(x)
    if _is_nonpos_int(1.0 + x):
        raise PoleError(x, "lerch_phi shift")
    az = abs(z)
    if az > 1 + 1e-15:
        raise DomainError("lerch_phi: |z| > 1")
    if abs(z - 1) < 1e-15:
        if not s.real > 1:
            raise DomainError("lerch_phi: z = 1 needs Re s > 1")
        v, err, n = _hurwitz_em(s, 1.0 + x)
        return EvalResult(v, err, n, True)
    if az <= 0.5 or s.real >= 12:
        v, err, n, ok = _lerch_series(s, z, x, ctl)
        return EvalResult(v, err, n, ok)
    # the Bose integral stalls for small Re s (t^(s-1) endpoint), so Jonquiere takes Re s < 1
    if s.real > 0 and x.real > -1 and (s.real >= 1 or x != 0):
        v, err, n, ok = _lerch_integral(s, z, x, ctl.tol)
        return EvalResult(v, err, n, ok)
    if x == 0 and not (s.imag == 0 and s.real == math.floor(s.real) and s.real >= 1):
        if z.imag == 0 and 0 < z.real <= 1:
            v, err, n, ok = _lerch_series(s, z, x, ctl)
            return EvalResult(v, err, n, ok)
        v = _lerch_jonquiere(s, z)
        return EvalResult(v, 1e-13 * max(abs(v), 1.0), 0, True)
    if az < 1:
        v, err, n, ok = _lerch_series(s, z, x, ctl)
        return EvalResult(v, err, n, ok)
    raise DomainError("lerch_phi: divergent parameter region")


def polylog(s, z, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Standard polylogarithm Li_s(z) = sum_{k>=1} z^k k^(-s)."""
    return lerch_phi(s, z, 0.0, ctl)


def li(s, z) -> complex:
    r = lerch_phi(s, z, 0.0)
    if not r.converged:
        raise ConvergenceError(f"polylog did not converge at s={s}, z={z}")
    return r.value


def gammainc_upper_scaled(alpha, z, max_iter: int = 5000) -> complex:
    """h with Gamma(alpha, z) = exp(-z) z**alpha h, by the Legendre continued fraction.

    Valid off the negative real axis; accurate to ~1e-14 for |z| >~ 0.3.
    """
    alpha = complex(alpha)
    z = complex(z)
    if z == 0:
        raise DomainError("gammainc_upper: z = 0")
    tiny = 1e-300
    b = z + 1.0 - alpha
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, max_iter + 1):
        an = -i * (i - alpha)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ConvergenceError(f"gammainc_upper: no convergence at alpha={alpha}, z={z}")


def gammainc_upper(alpha, z, max_iter: int = 5000) -> complex:
    """Upper incomplete gamma Gamma(alpha, z), principal z**alpha."""
    alpha = complex(alpha)
    z = complex(z)
    h = gammainc_upper_scaled(alpha, z, max_iter)
    return cmath.exp(-z + alpha * plog(z)) * h
