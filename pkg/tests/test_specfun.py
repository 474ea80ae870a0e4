import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from isocs.errors import DivergentArgumentError, DomainError
from isocs.measures import reducing_params, printed_params
from isocs.specfun import (MeijerParams, SeriesControl, hyp1f1, hyp1f1_parity_parts, hyp2f1, ln_gamma,
                           log_hyp1f1_unit, log_meijer_g20_12, log_pochhammer, meijer_g11_12_negative,
                           meijer_g20_12, mellin_gamma_ratio, mellin_moment, pochhammer)


def test_ln_gamma_trivial_points():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(2.0) == 0.0


def test_ln_gamma_half_against_mpmath():
    ref = float(mpmath.log(mpmath.sqrt(mpmath.pi)))
    assert abs(ln_gamma(0.5) - ref) <= 1e-13 * abs(ref)


@given(st.floats(min_value=1e-3, max_value=1e6))
def test_ln_gamma_relative_error(x):
    ref = float(mpmath.loggamma(mpmath.mpf(x)))
    assert abs(ln_gamma(x) - ref) <= 1e-13 * max(1.0, abs(ref))


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_ln_gamma_domain(x):
    with pytest.raises(DomainError):
        ln_gamma(x)


def test_pochhammer_examples():
    assert pochhammer(7.3, 0) == 1.0
    assert pochhammer(3, 2) == 12.0
    assert pochhammer(2.0, 3) == 24.0


@pytest.mark.parametrize("a,n", [(2.0, 80), (1.75, 200), (0.5, 60)])
def test_pochhammer_log_space_matches_mpmath(a, n):
    logv, sign = log_pochhammer(a, n)
    ref = mpmath.log(mpmath.rf(a, n))
    assert sign == 1
    assert abs(logv - float(ref)) <= 1e-12 * abs(float(ref))


def test_pochhammer_overflow_is_signalled():
    with pytest.raises(OverflowError):
        pochhammer(2.0, 400)
    logv, sign = pochhammer(2.0, 400, log=True)
    assert sign == 1 and math.isfinite(logv)


def test_pochhammer_zero_factor():
    assert pochhammer(-2.0, 5) == 0.0


def test_hyp1f1_examples():
    assert hyp1f1(1, 2, 0.0) == 1.0
    assert abs(hyp1f1(1, 1, 1.0) - math.e) <= 1e-13 * math.e
    ref = float(mpmath.hyp1f1(1, 2, 1))
    assert abs(hyp1f1(1, 2, 1.0) - ref) <= 1e-14 * ref


@given(st.floats(min_value=-80, max_value=60), st.sampled_from([1.5, 2.0, 2.25, 3.0, 5.0]),
       st.sampled_from([1.0, 0.5, -0.5, 2.0]))
def test_hyp1f1_against_mpmath(x, b, a):
    ref = float(mpmath.hyp1f1(a, b, x))
    got = hyp1f1(a, b, x)
    assert abs(got - ref) <= 1e-11 * max(abs(ref), 1e-300) + 1e-300


def test_hyp1f1_complex_argument():
    w = 0.7 - 1.3j
    ref = complex(mpmath.hyp1f1(1, 2.5, w))
    assert abs(hyp1f1(1.0, 2.5, w) - ref) <= 1e-14


def test_hyp1f1_non_convergence_is_reported():
    from isocs.errors import ConvergenceError
    with pytest.raises(ConvergenceError):
        hyp1f1(1.0, 2.0, 25.0, SeriesControl(max_terms=5))


def test_hyp1f1_rejects_nonpositive_integer_b():
    with pytest.raises(DomainError):
        hyp1f1(1.0, -2.0, 1.0)


@pytest.mark.parametrize("b", [1.5, 2.0, 2.5, 5.0])
def test_hyp1f1_recurrence(b):
    x = np.linspace(0.0, 50.0, 41)
    lhs = hyp1f1(1.0, b, x)
    rhs = 1.0 + x / b * hyp1f1(1.0, b + 1.0, x)
    assert np.max(np.abs(lhs - rhs) / lhs) <= 1e-12


def test_parity_parts_at_zero():
    assert hyp1f1_parity_parts(2.0, 0.0) == (1.0, 0.0)


@given(st.floats(min_value=0.0, max_value=40.0), st.sampled_from([1.5, 2.0, 2.25, 3.0]))
def test_parity_parts_sum_to_full(x, b):
    even, odd = hyp1f1_parity_parts(b, x)
    f = hyp1f1(1.0, b, x)
    assert abs(even + odd - f) <= 1e-12 * f


def test_parity_even_part_against_brute_force():
    b, x = 2.0, 1.0
    ref = mpmath.nsum(lambda m: mpmath.mpf(x) ** (2 * m) / mpmath.rf(b, 2 * m), [0, mpmath.inf])
    even, _ = hyp1f1_parity_parts(b, x)
    assert abs(even - float(ref)) <= 1e-15


def test_log_hyp1f1_unit_against_mpmath():
    for b in (1.75, 2.0, 2.25, 3.5):
        for y in (0.0, 1.0, 29.0, 31.0, 200.0, 5000.0):
            ref = float(mpmath.log(mpmath.hyp1f1(1, b, y)))
            assert abs(log_hyp1f1_unit(b, y) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_hyp2f1_examples():
    assert hyp2f1(0.3, 0.4, 1.5, 0.0) == 1.0
    x = 0.5
    assert abs(hyp2f1(1, 1, 2, x) + math.log(1 - x) / x) <= 1e-12


@pytest.mark.parametrize("x", [-0.95, -0.5, 0.3, 0.95, 0.99])
def test_hyp2f1_against_mpmath(x):
    ref = float(mpmath.hyp2f1(1.0, 3.5, 2.0, x))
    assert abs(hyp2f1(1.0, 3.5, 2.0, x) - ref) <= 1e-11 * abs(ref)


def test_hyp2f1_divergent_argument():
    beta = 0.1
    with pytest.raises(DivergentArgumentError) as info:
        hyp2f1(1, 3, 2, math.exp(4 * beta))
    assert info.value.argument == pytest.approx(math.exp(0.4))


def test_meijer_reducing_triple_is_elementary():
    # G^{2,0}_{1,2}(x | -1; -1, g/2) = x^{g/2} e^{-x}
    for g in (1.5, 2.0, 2.5):
        x = np.array([0.01, 0.3, 1.0, 4.0, 30.0])
        assert np.allclose(meijer_g20_12(x, reducing_params(g)), x ** (g / 2) * np.exp(-x), rtol=1e-10, atol=0)


def test_meijer_against_mpmath_general_triple():
    p = MeijerParams(0.7, 0.2, 1.3)
    for x in (0.05, 0.8, 3.0):
        ref = float(mpmath.meijerg([[], [0.7]], [[0.2, 1.3], []], x))
        assert abs(meijer_g20_12(x, p) - ref) <= 1e-10 * abs(ref)


def test_meijer_contour_independence():
    p = MeijerParams(0.7, 0.2, 1.3)
    a = meijer_g20_12(1.0, p, sigma=0.5)
    b = meijer_g20_12(1.0, p, sigma=2.0)
    assert abs(a - b) <= 1e-8 * abs(a)


def test_meijer_contour_outside_strip():
    with pytest.raises(DomainError):
        meijer_g20_12(1.0, MeijerParams(0.7, 0.2, 1.3), sigma=-0.5)


def test_meijer_moment_matches_gamma_ratio():
    p = reducing_params(2.0)
    f = lambda x: meijer_g20_12(x, p)
    for s in (1, 2, 5, 10):
        ref = mellin_gamma_ratio(p, s)
        assert abs(mellin_moment(f, s, scale=3.0 + s) - ref) <= 1e-7 * ref


def test_meijer_positive_on_log_grid():
    x = np.logspace(-3, 3, 25)
    for p in (reducing_params(2.0), MeijerParams(0.7, 0.2, 1.3)):
        # the scaled value stays positive where G itself underflows
        _, val, _ = log_meijer_g20_12(x, p)
        assert np.all(val > 0)


def test_log_meijer_far_range():
    # e^{-1000} underflows, the log form does not
    logs, val, _ = log_meijer_g20_12(1000.0, reducing_params(2.0))
    assert abs(float(logs[0] + np.log(val[0])) - (math.log(1000.0) - 1000.0)) <= 1e-9


def test_printed_triple_strip_excludes_low_moments():
    assert printed_params(2.0).strip_left() == 1.0


def test_meijer_g11_negative_argument_against_mpmath():
    g = 2.0
    for y in (0.1, 1.0, 5.0):
        ref = mpmath.meijerg([[0], []], [[0], [-g / 2]], -y)
        assert abs(meijer_g11_12_negative(y, 0.0, 0.0, -g / 2) - float(mpmath.re(ref))) <= 1e-12 * abs(ref)


def test_mellin_moment_examples():
    assert abs(mellin_moment(lambda x: np.exp(-x), 3.0) - 2.0) <= 1e-9
    assert abs(mellin_moment(lambda x: x * np.exp(-x / 4) / 16, 1.0, scale=8.0) - 1.0) <= 1e-9


def test_mellin_moment_divergent_tail():
    from isocs.errors import DivergentIntegralError
    with pytest.raises(DivergentIntegralError):
        mellin_moment(lambda x: np.ones_like(x), 1.0)


def test_meijer_rejects_sign_changing_triple():
    with pytest.raises(DomainError):
        log_meijer_g20_12(1.0, MeijerParams(0.1, 0.5, 0.9))
