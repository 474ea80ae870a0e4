import mpmath
import numpy as np
import pytest

from isocs.errors import DomainError
from isocs.fock import FockSpace
from isocs.measures import (RadialMeasure, reducing_params, default_targets, identity_resolution_residual,
                            log_printed_even_weight, meijer_lambda, moment_check, normalized_moments,
                            radial_diagonal, reduced_weight)
from isocs.specfun import mellin_moment


def test_reduced_weight_against_gamma_density():
    x = np.array([0.3, 2.0, 11.0])
    ref = [float((mpmath.mpf(v) / 4) ** 1 * mpmath.exp(-mpmath.mpf(v) / 4) / (4 * mpmath.gamma(2))) for v in x]
    assert np.allclose(reduced_weight(x, 2.0), ref, rtol=1e-14, atol=0)
    with pytest.raises(DomainError):
        reduced_weight(0.0, 2.0)


@pytest.mark.parametrize("k,target", [(0, 1.0), (1, 8.0)])
def test_lambda_low_moments(k, target):
    val = mellin_moment(lambda x: reduced_weight(x, 2.0), k + 1.0, scale=8.0)
    assert abs(val - target) <= 1e-9 * target


def test_even_moment_value():
    # s = 2n + 1 at n = 1: u = x/4 turns the integral into 16 Gamma(4) / Gamma(2)
    m = RadialMeasure("elementary_even", 2.0)
    val = mellin_moment(lambda x: m.density(x), 3.0, scale=16.0)
    assert val == pytest.approx(96.0, rel=1e-9)


def test_elementary_moments_exact():
    rep = moment_check(RadialMeasure("elementary_gk", 2.0), default_targets("gkcs", 2.0, 21), "canonical")
    assert rep.ks == tuple(range(21))
    assert rep.max_deviation < 1e-8


def test_perturbed_scale_is_detected():
    rep = moment_check(RadialMeasure("elementary_gk", 2.0, scale=5.0), default_targets("gkcs", 2.0, 6),
                       "canonical")
    assert rep.max_deviation > 0.1


def test_meijer_lambda_against_mpmath():
    for g in (1.5, 2.0, 3.0):
        for x in (0.05, 1.0, 7.0, 40.0):
            ref = mpmath.meijerg([[], [-1]], [[-1, g / 2], []], x / 4) / (4 * mpmath.gamma(g / 2 + 1))
            assert meijer_lambda(x, g) == pytest.approx(float(ref), rel=1e-10)


def test_meijer_lambda_reduces_to_elementary(gamma):
    x = np.linspace(0.2, 30.0, 25)
    assert np.allclose(meijer_lambda(x, gamma), reduced_weight(x, gamma), rtol=1e-10, atol=0)


def test_printed_even_weight_against_mpmath():
    g = 2.5
    for x in (0.1, 3.0, 20.0):
        y = mpmath.mpf(x) / 4
        ref = (mpmath.mpf(x) ** (g / 2) * mpmath.exp(-y) / 2 ** (g + 2)
               * mpmath.meijerg([[0], []], [[0], [-g / 2]], -y))
        assert float(log_printed_even_weight(x, g)[0]) == pytest.approx(float(mpmath.log(mpmath.re(ref))), rel=1e-10)


def test_printed_weights_positive():
    x = np.linspace(0.1, 6.0, 30) ** 2
    for form in ("paper_meijer_even", "paper_meijer_odd", "paper_meijer_gk"):
        for g in (1.5, 2.0, 2.5):
            assert np.all(RadialMeasure(form, g).weight(x) > 0)


def test_measure_validation():
    with pytest.raises(ValueError):
        RadialMeasure("flat", 2.0)
    with pytest.raises(ValueError):
        RadialMeasure("elementary_gk", 2.0, scale=0.0)
    assert RadialMeasure("paper_meijer_odd", 2.0).family == "bgcs_odd"
    with pytest.raises(ValueError):
        identity_resolution_residual("gkcs", RadialMeasure("elementary_even", 2.0), FockSpace(2.0, 16))


def test_gk_resolution_of_identity():
    space = FockSpace(2.0, 40)
    assert identity_resolution_residual("gkcs", RadialMeasure("elementary_gk", 2.0), space, n_max=20) < 1e-6


def test_even_resolution_and_odd_zeros():
    space = FockSpace(2.0, 40)
    m = RadialMeasure("elementary_even", 2.0)
    assert identity_resolution_residual("bgcs_even", m, space, n_max=20) < 1e-6
    diag = radial_diagonal("bgcs_even", m, space)
    assert np.all(diag[1::2] == 0.0)


def test_reducing_gk_weight_resolves_identity():
    # N^2 lambda with the Meijer lambda against unit-normalized states
    space = FockSpace(2.5, 32)
    m = RadialMeasure("paper_meijer_gk", 2.5)
    assert identity_resolution_residual("gkcs", m, space) < 1e-8


def test_fixed_node_convergence():
    m = RadialMeasure("elementary_gk", 2.0)
    ks = np.arange(12)
    coarse = np.max(np.abs(normalized_moments(m, ks, nodes=64) - 1))
    fine = np.max(np.abs(normalized_moments(m, ks, nodes=128) - 1))
    assert fine < coarse and fine < 1e-9


def test_reducing_triple_is_reducing():
    p = reducing_params(2.0)
    assert (p.a1, p.b1, p.b2) == (-1.0, -1.0, 1.0)
