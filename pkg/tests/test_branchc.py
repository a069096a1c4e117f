import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from zetamellin.branchc import branch_plan, cpow, floorc, frac, logsin_split, plog, sgn2
from zetamellin.errors import DomainError, SingularityError

finite = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


def test_plog_negative_axis_upper_edge():
    assert plog(-2.0) == complex(math.log(2.0), math.pi)
    assert plog(complex(-2.0, -0.0)).imag == math.pi


def test_plog_zero_raises():
    with pytest.raises(DomainError):
        plog(0)


def test_cpow_zero_base():
    assert cpow(0, 2 + 1j) == 0
    with pytest.raises(DomainError):
        cpow(0, -1)


def test_cpow_principal_branch():
    # (-1)^(1/2) = i on the principal branch
    assert abs(cpow(-1, 0.5) - 1j) < 1e-15
    assert cpow(4.0, 0.5) == 2.0


def test_frac_and_floor():
    assert frac(2.75 - 3j) == complex(0.75, -3)
    assert frac(-0.25) == 0.75
    assert floorc(-0.25) == -1
    assert 0.0 <= frac(-1e-300).real < 1.0


def test_sgn2():
    assert sgn2(0.0) == 1 and sgn2(-0.0) == 1 and sgn2(-1e-300) == -1


def test_logsin_split_singular_at_integers():
    with pytest.raises(SingularityError):
        logsin_split(3.0)


@given(cplx)
def test_plog_imag_in_half_open_interval(z):
    assume(z != 0)
    w = plog(z)
    # -pi itself only appears as the rounded arg of a point just below the negative axis
    assert -math.pi <= w.imag <= math.pi
    if w.imag == -math.pi:
        assert z.imag < 0
    if z.imag == 0 and z.real < 0:
        assert w.imag == math.pi
    assert abs(cmath.exp(w) - z) <= 1e-13 * abs(z)


@given(cplx)
def test_frac_plus_floor_is_identity(z):
    f = frac(z)
    assert 0.0 <= f.real < 1.0
    assert abs(f + floorc(z) - z) <= 1e-12 * max(1.0, abs(z))


@given(st.builds(complex, st.floats(-5, 5), st.floats(-0.8, 0.8)))
def test_logsin_split_matches_direct(z):
    assume(abs(z.real - round(z.real)) > 1e-3 or abs(z.imag) > 1e-3)
    direct = cmath.log(4 * cmath.sin(math.pi * z) ** 2)
    got = logsin_split(z)
    # equal modulo 2 pi i; the split form is the continuous branch in Re z
    k = (got - direct).imag / (2 * math.pi)
    assert abs(got.real - direct.real) < 1e-10
    assert abs(k - round(k)) < 1e-9


def test_logsin_split_real_axis_is_real():
    for x in (0.1, 0.5, 1.3, -2.7):
        v = logsin_split(x)
        assert abs(v.imag) < 1e-14
        assert abs(v.real - math.log(4 * math.sin(math.pi * x) ** 2)) < 1e-13


def test_branch_plan_rules():
    assert branch_plan(1.0, 0.3, 1.0).d_plus == 1.0
    assert branch_plan(1.0, 0.3, 1.0).d_minus == 1
    assert branch_plan(1.0, 0.3 - 2j, 1.0).d_minus == -1
    p = branch_plan(1 + 1j, -3j, 1.0)
    assert p.d_plus == 3.0
    with pytest.raises(DomainError):
        branch_plan(1.0, 0.0, 0.0)


def test_branch_plan_statement_rule():
    p = branch_plan(1 + 1j, -3j, 1.0, statement_rule=True)
    assert p.d_minus == sgn2(2 * 3.0 * 1 - 3)
