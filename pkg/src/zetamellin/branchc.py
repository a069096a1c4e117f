"""Branch-aware complex kernel.

All complex quantities are plain Python ``complex`` values (aliased as
``CNum``).  Logarithms use the principal branch with imaginary part in
(-pi, pi]; powers are ``a**b = exp(b*log a)`` on that branch.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError

CNum = complex

TWO_PI = 2.0 * math.pi


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{what}: non-finite result")
    return z


def plog(z) -> complex:
    """Principal logarithm; the negative real axis maps to +i*pi."""
    z = complex(z)
    if z == 0:
        raise DomainError("plog: logarithm of zero")
    if z.imag == 0.0 and z.real < 0.0:
        # cmath honours the sign of a negative zero; the closed upper edge does not
        return complex(math.log(-z.real), math.pi)
    return cmath.log(z)


def cpow(a, b) -> complex:
    """Principal power ``exp(b * plog(a))``."""
    a = complex(a)
    b = complex(b)
    if a == 0:
        if b.real > 0:
            return 0j
        raise DomainError("cpow: zero base with Re(exponent) <= 0")
    if b == 0:
        return 1 + 0j
    if a.imag == 0.0 and a.real > 0.0 and b.imag == 0.0:
        return complex(a.real ** b.real)
    try:
        return _finite(cmath.exp(b * plog(a)), "cpow")
    except OverflowError as exc:
        raise DomainError("cpow: overflow") from exc


def _split_real(x: float) -> tuple[float, float]:
    fl = math.floor(x)
    r = x - fl
    if r >= 1.0:  # x is a negative number above -ulp
        r = 0.0
        fl += 1.0
    return float(fl), r


def frac(z) -> complex:
    """Complex fractional part ``{Re z} + i Im z``."""
    z = complex(z)
    return complex(_split_real(z.real)[1], z.imag)


def floorc(z) -> complex:
    """``z - frac(z)``, which is the real integer ``floor(Re z)``."""
    return complex(_split_real(complex(z).real)[0], 0.0)


def sgn2(x: float) -> int:
    """Two-valued sign: +1 for x >= 0, -1 for x < 0."""
    return 1 if x >= 0 else -1


def logsin_split(z) -> complex:
    """log(4 sin^2(pi z)) through the decaying-exponential factorization."""
    z = complex(z)
    if z.imag == 0.0 and z.real == math.floor(z.real):
        raise SingularityError(f"logsin_split: logarithmic singularity at {z.real}")
    sg = sgn2(z.imag)
    w = complex(sg * z.real, abs(z.imag))
    q = cmath.exp(1j * TWO_PI * sg * z)
    return 1j * TWO_PI * (0.5 - frac(w)) + 2.0 * plog(1.0 - q)


@dataclass(frozen=True)
class BranchPlan:
    d_plus: float
    d_minus: int


def branch_plan(a, b, d: float, statement_rule: bool = False) -> BranchPlan:
    """Cutoff ``d_plus`` and sign ``d_minus`` for complex slopes and offsets.

    With ``statement_rule`` the sign is ``sgn2(2 d_plus Im a + Im b)``
    instead of the one-sided limit rule.
    """
    a = complex(a)
    b = complex(b)
    if not d > 0:
        raise DomainError("branch_plan: d must be positive")
    ia, ib = a.imag, b.imag
    d_plus = float(d)
    hit = False
    if ia != 0.0:
        x = -ib / ia
        if x > d:
            d_plus = x
            hit = True
    if statement_rule:
        return BranchPlan(d_plus, sgn2(2.0 * d_plus * ia + ib))
    if ia == 0.0 and ib == 0.0:
        dm = 1
    elif ia == 0.0:
        dm = sgn2(ib)
    else:
        v = 0.0 if hit else ia * d_plus + ib
        # limit from the right: on the zero the slope Im a decides
        dm = sgn2(ia) if v == 0.0 else sgn2(v)
    return BranchPlan(d_plus, dm)
