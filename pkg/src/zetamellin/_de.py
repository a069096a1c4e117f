"""Double-exponential node tables shared by the quadrature oracle and the
integral routes of the special functions."""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

_HALF_PI = 0.5 * math.pi


@lru_cache(maxsize=None)
def tanh_sinh_level(level: int, tmax: float = 6.0):
    """Nodes of level ``level`` (step 2**-level) on (-1, 1).

    Returns (offset, weight) where the node pair is ``-1 + offset`` and
    ``1 - offset``; ``offset`` is computed without cancellation so that
    singular endpoints can be approached to ~1e-300.  Level 0 includes the
    centre (offset 1); finer levels only carry the new odd-indexed nodes.
    """
    h = 2.0 ** (-level)
    if level == 0:
        t = np.arange(0.0, tmax + h / 2, h)
    else:
        t = np.arange(h, tmax + h / 2, 2 * h)
    u = _HALF_PI * np.sinh(t)
    e = np.exp(-2.0 * u)
    offset = 2.0 * e / (1.0 + e)
    w = _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
    keep = offset > 1e-300
    return offset[keep], w[keep]


@lru_cache(maxsize=None)
def exp_sinh_level(level: int, tmin: float = -6.0, tmax: float = 4.5):
    """Nodes x = exp(pi/2 sinh t) for integrals over (0, inf)."""
    h = 2.0 ** (-level)
    if level == 0:
        t = np.arange(math.ceil(tmin), tmax + h / 2, h)
    else:
        start = math.ceil(tmin) + h
        t = np.arange(start, tmax + h / 2, 2 * h)
    u = _HALF_PI * np.sinh(t)
    x = np.exp(u)
    w = _HALF_PI * np.cosh(t) * x
    keep = (x > 1e-300) & (x < 1e300)
    return x[keep], w[keep]


@lru_cache(maxsize=None)
def gauss_legendre(n: int):
    return np.polynomial.legendre.leggauss(n)
