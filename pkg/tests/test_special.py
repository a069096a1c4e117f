import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from zetamellin.errors import DomainError, PoleError
from zetamellin.special import (EULER_GAMMA, SeriesControl, cdigamma, cgamma, digamma, gamma,
                                gammainc_upper, hurwitz_em, hurwitz_series, lerch_phi, li,
                                loggamma, poch, polylog, rgamma, zeta, zeta_h)

from conftest import close


def mp(f, *args):
    # default 15-digit mpmath loses digits near integer orders
    with mpmath.workdps(30):
        return complex(f(*args))

# frozen from mpmath at 30 digits
GAMMA_REF = [(0.5 + 1j, 0.3006946172606558 - 0.4249678794331238j),
             (-2.5 + 0.3j, -0.6138229974377415 - 0.2112326149370418j)]


@pytest.mark.parametrize("z,ref", GAMMA_REF)
def test_gamma_frozen(z, ref):
    assert close(gamma(z).value, ref, 1e-13)


def test_digamma_frozen():
    assert close(digamma(3 - 2j).value, 1.1645915153739774 - 0.6708072826422302j, 1e-13)
    assert close(cdigamma(1.0), -EULER_GAMMA, 1e-15)


def test_gamma_poles():
    with pytest.raises(PoleError):
        cgamma(-3)
    assert rgamma(-3) == 0


def test_poch_integer_values():
    assert close(poch(3, 4), 3 * 4 * 5 * 6)
    assert poch(-2, 3) == 0
    assert poch(2.5, 0) == 1


def test_hurwitz_frozen():
    assert close(zeta_h(-2.5 + 0.7j, 0.3), -0.010793549323394862 - 0.011687229686105059j, 1e-11)
    assert close(zeta(0.5 + 14j), 0.02224114260999359 - 0.10325812326645006j, 1e-11)


def test_zeta_special_values():
    assert close(zeta(2), math.pi ** 2 / 6, 1e-14)
    assert close(zeta(-1), -1 / 12, 1e-14)
    assert close(zeta(0), -0.5, 1e-14)
    with pytest.raises(PoleError):
        hurwitz_em(1, 0.5)


def test_hurwitz_series_agrees_with_em():
    r = hurwitz_series(3 + 1j, 0.7)
    assert r.converged
    assert close(r.value, hurwitz_em(3 + 1j, 0.7).value, 1e-11)


def test_polylog_frozen():
    assert close(li(2, cmath.exp(0.7j)), 0.6678766380917989 + 0.954448086482735j, 1e-12)
    assert close(polylog(-1.5 + 0.5j, 0.5j).value, -0.5615138158458322 + 0.17039865163863363j, 1e-12)


def test_lerch_frozen():
    assert close(lerch_phi(2.5, 0.3 + 0.4j, 0.25).value, 0.1550906003228164 + 0.2614231148372631j, 1e-12)


def test_lerch_domain():
    with pytest.raises(DomainError):
        lerch_phi(2, 1.5)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 1.0)


def test_gammainc_frozen():
    assert close(gammainc_upper(0.5 + 1j, 3 - 1j), -0.025505326765667205 + 0.019182332331973976j, 1e-12)


def test_series_control_budget_is_reported():
    r = hurwitz_series(1.1, 1.0, SeriesControl(tol=1e-15, max_terms=5))
    assert not r.converged


box = st.builds(complex, st.floats(-6, 6), st.floats(-6, 6))


@given(box)
def test_gamma_recurrence(z):
    assume(min(abs(z - n) for n in range(-8, 1)) > 1e-3)
    assert close(cgamma(z + 1), z * cgamma(z), 1e-12)


@given(box)
def test_gamma_reflection(z):
    assume(min(abs(z - n) for n in range(-8, 9)) > 1e-2)
    lhs = cgamma(z) * cgamma(1 - z) * cmath.sin(math.pi * z)
    assert close(lhs, math.pi, 1e-11)


@given(box)
def test_loggamma_matches_mpmath(z):
    assume(min(abs(z - n) for n in range(-8, 1)) > 1e-2)
    assert close(cmath.exp(loggamma(z)), mp(mpmath.gamma, z), 1e-11)


@given(st.builds(complex, st.floats(-2.5, 4), st.floats(-10, 10)), st.floats(0.1, 2.0))
def test_hurwitz_em_matches_mpmath(s, x):
    assume(abs(s - 1) > 0.05)
    assert close(hurwitz_em(s, x).value, mp(mpmath.zeta, s, x), 1e-9, 1e-12)


@given(st.builds(complex, st.floats(-2, 4), st.floats(-4, 4)), st.floats(0.1, 1.5))
def test_hurwitz_shift(s, x):
    assume(abs(s - 1) > 0.05)
    lhs = zeta_h(s, x) - zeta_h(s, x + 1)
    assert close(lhs, x ** -s, 1e-9, 1e-12)


@given(st.floats(0.5, 4), st.floats(0, 2 * math.pi))
def test_polylog_unit_circle_matches_mpmath(s, t):
    z = cmath.exp(1j * t)
    assume(abs(z - 1) > 1e-2 or s > 1.2)
    assert close(li(s, z), mp(mpmath.polylog, s, z), 1e-10, 1e-12)


@given(st.floats(-3, 3), st.floats(0.05, 0.95))
def test_polylog_inversion_relation(s, t):
    # Li_s(e^{2 pi i t}) + e^{i pi s} Li_s(e^{-2 pi i t}) = (2 pi)^s e^{i pi s/2} zeta(1-s, t) / Gamma(s)
    assume(min(abs(s - n) for n in range(-3, 4)) > 1e-2)
    z = cmath.exp(2j * math.pi * t)
    lhs = li(s, z) + cmath.exp(1j * math.pi * s) * li(s, 1 / z)
    rhs = (2 * math.pi) ** s * cmath.exp(0.5j * math.pi * s) * zeta_h(1 - s, t) / cgamma(s)
    assert close(lhs, rhs, 1e-9, 1e-11)
