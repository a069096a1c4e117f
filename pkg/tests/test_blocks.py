import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from zetamellin import blocks as B
from zetamellin.blocks import IdentityCase
from zetamellin.errors import DomainError, PoleError, RegimeError
from zetamellin.quadrature import I_oracle, IntegrandSpec, integrate
from zetamellin.special import zeta, zeta_h

from conftest import close


def quad(kind, params, lo, hi, tol=1e-12):
    return integrate(IntegrandSpec(kind, params, (lo, hi)), tol).value


def mpz(s, x):
    with mpmath.workdps(30):
        return complex(mpmath.zeta(s, x))


# ---------------------------------------------------------------- k-terms

@pytest.mark.parametrize("case,k", [
    (IdentityCase(-1.5 + 0.5j, 0.7, 0.3, 0.0, 1.0), 1),
    (IdentityCase(-0.4, -1.3, 0.61, 0.25, 2.0), 3),
    (IdentityCase(-2.5 + 0.7j, 1.0, 0.0, 0.1, 0.5), 7),
])
def test_f_sk_is_head_integral(case, k):
    p = {"s": case.s, "a": case.a, "b": case.b, "c": case.c, "k": k}
    ref = -quad("sin-kernel", p, 0, case.d) / k
    assert close(B.f_sk(case, k).value, ref, 1e-9, 1e-12)


@pytest.mark.parametrize("case,k", [
    (IdentityCase(0.5, 0.7, 0.3, 0.0, 1.0), 1),
    (IdentityCase(1.5 - 1j, -1.3, 0.61, 0.25, 2.0), 2),
    (IdentityCase(-0.5, 1.0, 0.25, 0.0, 0.5), 5),
])
def test_F_sk_is_tail_integral(case, k):
    p = {"s": case.s, "a": case.a, "b": case.b, "c": case.c, "k": k}
    ref = quad("sin-kernel", p, case.d, math.inf, 1e-11) / k
    assert close(B.F_sk(case, k).value, ref, 1e-8, 1e-11)


def test_F_is_f_plus_g_for_real_a():
    case = IdentityCase(0.6 + 0.4j, 0.8, 0.35, 0.1, 1.3)
    for k in (1, 2, 4):
        lhs = B.F_sk(case, k).value
        rhs = B.f_sk(case, k).value + B.g_sk(case.s, case.a, case.b, case.c, k).value
        assert close(lhs, rhs, 1e-11, 1e-13)


def test_f_sk_block_split_and_alt_form():
    case = IdentityCase(-0.8 + 0.2j, 0.6, 0.2, 0.1, 1.0)
    for k in (1, 2):
        f = B.f_sk(case, k).value
        assert close(f, B.f_sk1(case, k).value + B.f_sk2(case, k).value, 1e-14)
        assert close(f, B.f_sk_alt(case, k), 1e-10)


def test_pole_and_domain_errors():
    with pytest.raises(PoleError):
        B.f_sk(IdentityCase(1.0, 0.7), 1)
    with pytest.raises(PoleError):
        B.g_sk(2, 0.7, 0, 0, 1)
    with pytest.raises(DomainError):
        IdentityCase(0.5, 1.0, 0.0, 0.0, 0.0)


# ---------------------------------------------------------------- I_s series

@pytest.mark.parametrize("case", [
    IdentityCase(2.5, 0.7, 0.3, 0.0, 1.0),
    IdentityCase(0.5, -0.7, 0.61, 0.25, 2.0),
    IdentityCase(1.5 - 1j, 1.3, 0.0, 0.25, 0.5),
])
def test_I_series_vs_oracle_real(case):
    assert close(B.I_series(case).value, I_oracle(case).value, 1e-8, 1e-10)


def test_I_series_vs_oracle_complex():
    case = IdentityCase(0.8, 1 + 0.5j, 0.2 - 2j, 0.25, 1.0)
    assert close(B.I_series(case).value, I_oracle(case).value, 1e-6, 1e-8)


@settings(max_examples=20)
@given(st.floats(-2.8, 3.2), st.floats(-3, 3), st.sampled_from([0.7, -0.7, 1.3]),
       st.floats(0, 0.95), st.sampled_from([0.0, 0.25]), st.sampled_from([0.5, 1.0, 2.0]))
def test_I_series_paths_agree(sr, si, a, b, c, d):
    s = complex(sr, si)
    assume(abs(s - round(sr)) > 0.1)
    case = IdentityCase(s, a, b, c, d)
    simple = B.I_series(case, path="simple").value
    general = B.I_series(case, path="general").value
    assert close(simple, general, 1e-11, 1e-12)


# ---------------------------------------------------------------- fractional-part identity

def test_M_known_value():
    # a = 1, b = 0, d = 1, s = 2: zeta(2) - 2 + 1/2
    assert close(B.M_lhs(2, 1.0, 0.0, 1.0).value, math.pi ** 2 / 6 - 1.5, 1e-14)


def test_R_remainder_vanishes_before_first_jump():
    assert B.R_remainder(2.5, 0.7, 0.3, 0.9).value == 0
    assert B.R_remainder(2.5, 0.7, 0.3, 1.5).value != 0


@pytest.mark.parametrize("s", [2.5, 3 + 2j, 1.5 - 1j])
@pytest.mark.parametrize("a", [0.7, -1.3])
@pytest.mark.parametrize("b,d", [(0.0, 1.0), (0.61, 2.0), (1.3, 0.5)])
def test_theorem1_principal(s, a, b, d):
    lhs, rhs = B.theorem1_sides(IdentityCase(s, a, b, 0, d))
    assert close(lhs, rhs, 1e-9, 1e-12)


def test_theorem1_lemma_sign_fails():
    # the a d s/(1-s) sign breaks the identity
    s, a, b, d = 2.5, 0.7, 0.3, 1.0
    lhs = math.pi / s * B.M_lhs(s, a, b, d, sign="lemma").value
    rhs = B.I_series(IdentityCase(s, a, b, 0, d)).value
    assert abs(lhs - rhs) > 1e-2


@pytest.mark.parametrize("s", [0.5, -0.5, -1.5, -2.5 + 0.7j])
@pytest.mark.parametrize("a,b", [(0.7, 0.3), (1.3, 1.61), (-0.7, 0.25), (0.4, -0.3)])
def test_theorem1_second_corrected(s, a, b):
    lhs, rhs = B.theorem1_sides(IdentityCase(s, a, b, 0, 1.0), identity="second")
    assert close(lhs, rhs, 1e-9, 1e-12)


def test_theorem1_second_printed_needs_reduced_b():
    # printed form holds for 0 <= b < 1 with R = 0 and fails once R != 0
    ok = B.theorem1_sides(IdentityCase(-0.5, 0.4, 0.3, 0, 1.0), "second", "printed")
    assert close(*ok, 1e-9)
    for a, b in ((1.3, 0.3), (0.7, 1.3)):
        bad = B.theorem1_sides(IdentityCase(-0.5, a, b, 0, 1.0), "second", "printed")
        assert abs(bad[0] - bad[1]) > 1e-1


# ---------------------------------------------------------------- Hurwitz continuation

@pytest.mark.parametrize("s", [-2.5, -1.5 + 0.5j, -0.5, 0.5, 0.5 + 3j, 2.5, 3.7])
@pytest.mark.parametrize("b", [0.1, 0.3, 0.7])
def test_hurwitz_continued_vs_mpmath(s, b):
    assert close(B.hurwitz_continued(s, b).value, mpz(s, 1 - b), 1e-10, 1e-12)


def test_hurwitz_special_points():
    assert close(B.hurwitz_continued(0, 0.3).value, -0.2, 1e-10)
    assert close(B.hurwitz_continued(-1, 0.0).value, -1 / 12, 1e-10)
    with pytest.raises(PoleError):
        B.hurwitz_continued(1, 0.3)
    with mpmath.workdps(30):
        psi = float(mpmath.digamma(0.7))
        lg = float(mpmath.loggamma(0.7) - mpmath.log(2 * mpmath.pi) / 2)
    assert close(B.hurwitz_regular_at_one(0.3).value, -psi, 1e-9)
    assert close(B.hurwitz_dzeta_at_zero(0.3).value, lg, 1e-9)


@settings(max_examples=15)
@given(st.floats(0.3, 2.0), st.floats(0.3, 2.5), st.floats(-2.5, 3.5), st.floats(-4, 4), st.floats(-1, 2))
def test_hurwitz_independent_of_a_and_d(a, d, sr, si, b):
    s = complex(sr, si)
    assume(abs(s - 1) > 0.1 and abs(s) > 0.05)
    v1 = B.hurwitz_continued(s, b, a, d).value
    v2 = B.hurwitz_continued(s, b).value
    assert close(v1, v2, 1e-9, 1e-12)


# ---------------------------------------------------------------- log-sine transforms

@pytest.mark.parametrize("case", [
    IdentityCase(-0.5, 0.7, 0.3, 0, 1.0),
    IdentityCase(-1.5 + 0.5j, -1.3, 0.61, 0, 2.0),
    IdentityCase(-2.5, 1.0, 0.0, 0, 0.5),
    IdentityCase(-0.7, 1 + 0.3j, 0.2 - 0.4j, 0, 1.0),
])
def test_logsine_finite_vs_quadrature(case):
    p = {"s": case.s, "a": case.a, "b": case.b}
    ref = quad("log-sine", p, 0, case.d)
    assert close(B.logsine_mellin_finite(case).value, ref, 1e-9, 1e-11)


@pytest.mark.parametrize("case", [
    IdentityCase(2.5, 0.7, 0.3, 0, 1.0),
    IdentityCase(1.5 - 1j, -1.3, 0.61, 0, 2.0),
    IdentityCase(3.0, 0.7, 0.3, 0, 1.0),
])
def test_logsine_tail_vs_quadrature(case):
    p = {"s": case.s, "a": case.a, "b": case.b}
    ref = quad("log-sine", p, case.d, math.inf, 1e-11)
    assert close(B.logsine_mellin_tail(case).value, ref, 1e-9, 1e-11)


def test_logsine_regimes():
    with pytest.raises(RegimeError):
        B.logsine_mellin_tail(IdentityCase(2.5, 1 + 1j, 0.3, 0, 1.0))
    with pytest.raises(RegimeError):
        B.logsine_mellin_finite(IdentityCase(0.5, 0.7, 0.3, 0, 1.0))


# ---------------------------------------------------------------- log-sine identity

@pytest.mark.parametrize("case", [
    IdentityCase(2.5, 0.7, 0.3, 0, 1.0),
    IdentityCase(3 + 2j, -1.3, 0.61, 0, 2.0),
    IdentityCase(1.5 - 1j, 1.0, 0.0, 0, 1.0),    # b in Z
    IdentityCase(2.5, 0.7, 0.3, 0, 1.0).replace(d=1.0, b=0.3, a=0.7),
    IdentityCase(2.5, 0.75, 0.25, 0, 1.0),       # ad + b in Z
])
def test_theorem2_principal(case):
    lhs, rhs = B.theorem2_sides(case)
    assert close(lhs, rhs, 1e-9, 1e-12)


@pytest.mark.parametrize("s,a,b", [(0.4, 0.7, 0.3), (0.4, -1.3, 0.61), (-0.6, 1.0, 0.0)])
def test_theorem2_second_display(s, a, b):
    # b in Z needs Re s < 0 for the k-sum to converge
    lhs, rhs = B.theorem2_sides(IdentityCase(s, a, b, 0, 1.0), identity="second")
    assert close(lhs, rhs, 1e-9, 1e-12)


def test_theorem2_printed_variant_fails_on_integer_endpoint():
    case = IdentityCase(2.5, 0.75, 0.25, 0, 1.0)
    lhs, rhs = B.theorem2_sides(case, variant="printed")
    assert abs(lhs - rhs) > 1e-3


def test_H_pole_at_integer_s():
    with pytest.raises(PoleError):
        B.H_lhs(2, 0.7, 0.3, 1.0)


# ---------------------------------------------------------------- negative integers

@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a,b,d", [(0.7, 0.3, 1.0), (-1.3, 0.61, 2.0), (1.0, 0.25, 0.5)])
def test_zeta_neg_recurrence(n, a, b, d):
    lhs, rhs = B.zeta_neg_recurrence(n, a, b, d)
    assert close(lhs, rhs, 1e-10, 1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a,b,d", [(0.7, 0.3, 1.0), (-1.3, 0.61, 2.0), (1.0, 0.0, 1.0)])
def test_ls_closed_vs_quadrature(n, a, b, d):
    ref = -0.5 * quad("log-sine", {"s": -n, "a": a, "b": b}, 0, d)
    assert close(B.ls_closed(n, a, b, d).value, ref, 1e-9, 1e-11)


def test_first_log_sine_moment_is_zero():
    assert abs(B.ls_closed(2, 1.0, 0.0, 1.0).value) < 1e-12


# ---------------------------------------------------------------- convergence bounds

def test_bounds_hold_on_real_case():
    checks = B.bound_checks(IdentityCase(-1.5, 0.7, 0.3, 0.0, 1.0), K=500)
    assert set(checks) == {"V", "VI", "VII", "VIII", "IX"}
    for c in checks.values():
        assert c.margin >= 0, c
    assert checks["IX"].bound == math.inf


def test_bound_IX_finite_for_complex_b():
    c = B.bound_checks(IdentityCase(-0.5, 1.0, 0.3 + 0.5j, 0.0, 1.0), items=("IX",), K=500)["IX"]
    assert math.isfinite(c.bound) and c.margin >= 0


def test_bound_VII_violated_for_complex_slope():
    # the printed bound misses the (s+1)/z correction of the 1F1 asymptotics
    case = IdentityCase(-0.5, 1 + 1j, 0.3 - 2j, 0.0, 1.0)
    c = B.bound_checks(case, items=("VII",), K=2000, x=1.5)["VII"]
    assert c.partial > c.bound
    assert 0.003 < c.bound < c.partial < 0.0035


def test_bounds_need_negative_real_part():
    with pytest.raises(RegimeError):
        B.h_bound(IdentityCase(0.5, 0.7, 0.3, 0.0, 1.0))


def test_limit_residual_decays():
    base = IdentityCase(0.8, 1.0, 0.3 + 0.1j, 0.0, 1.0)
    r0 = B.limit_residual(base)
    r1 = B.limit_residual(base.replace(b=0.3 + 0.6j))
    ratio = r1 / r0
    assert math.exp(-math.pi) / 2 <= ratio <= 2 * math.exp(-math.pi)


# ---------------------------------------------------------------- properties

@settings(max_examples=20)
@given(st.floats(1.2, 4), st.floats(-4, 4), st.sampled_from([1, -1]), st.floats(0.3, 2.0),
       st.floats(-1, 2), st.floats(0.3, 2.5))
def test_theorem1_principal_property(sr, si, sg, a, b, d):
    s = complex(sr, si)
    lhs, rhs = B.theorem1_sides(IdentityCase(s, sg * a, b, 0, d))
    assert close(lhs, rhs, 1e-8, 1e-11)


@settings(max_examples=20)
@given(st.floats(-2.8, 3.5), st.floats(-3, 3), st.floats(0.3, 2.0), st.floats(-1, 2),
       st.sampled_from([0.0, 0.25, 0.1]), st.floats(0.3, 2.5))
def test_I_is_linear_in_cos_sin_of_c(sr, si, a, b, c, d):
    # c enters only through cos(2 pi c) and sin(2 pi c)
    s = complex(sr, si)
    assume(abs(s - round(sr)) > 0.1)
    case = IdentityCase(s, a, b, c, d)
    i0 = B.I_series(case.replace(c=0.0)).value
    i4 = B.I_series(case.replace(c=0.25)).value
    expect = cmath.cos(2 * math.pi * c) * i0 + cmath.sin(2 * math.pi * c) * i4
    assert close(B.I_series(case).value, expect, 1e-10, 1e-12)
