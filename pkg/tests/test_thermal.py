import math

import mpmath
import numpy as np
import pytest

from isocs.errors import DivergentArgumentError, DomainError, TruncationError
from isocs.fock import FockSpace
from isocs.states import bgcs_label, gkcs_label, make_state
from isocs.thermal import (ThermalParams, density, husimi_closed_form, husimi_normalization, husimi_q,
                           husimi_radial, p_function, p_reconstruction, partition_function, pq_consistency,
                           printed_partition_function, printed_thermal_moment, thermal_moment,
                           thermal_moment_trace)

BETAS = (0.25, 0.5, 1.0)
_START = {"bgcs_even": 0, "bgcs_odd": 1, "gkcs": 0}
_STEP = {"bgcs_even": 2, "bgcs_odd": 2, "gkcs": 1}


def _mp_z(family, beta, gamma):
    a, d = _START[family], _STEP[family]
    return mpmath.nsum(lambda k: mpmath.exp(-beta * 2 * (2 * (a + d * k) + gamma)), [0, mpmath.inf])


def test_params_validation():
    with pytest.raises(DomainError):
        ThermalParams(0.0, 2.0)
    with pytest.raises(DomainError):
        ThermalParams(1.0, 0.5)


@pytest.mark.parametrize("beta", BETAS)
@pytest.mark.parametrize("family", ["bgcs_even", "bgcs_odd", "gkcs"])
def test_partition_function_against_mpmath(family, beta):
    p = ThermalParams(beta, 2.3)
    assert partition_function(family, p) == pytest.approx(float(_mp_z(family, beta, 2.3)), rel=1e-14)


def test_gk_partition_function_closed_form():
    p = ThermalParams(0.5, 2.0)
    assert abs(partition_function("gkcs", p) - math.exp(-2) / (1 - math.exp(-2))) <= 1e-14
    assert partition_function("gkcs", p) == pytest.approx(printed_partition_function("gkcs", p), rel=1e-12)


@pytest.mark.parametrize("beta", BETAS)
def test_odd_partition_ratio(beta):
    p = ThermalParams(beta, 2.0)
    ratio = partition_function("bgcs_odd", p) / printed_partition_function("bgcs_odd", p)
    assert abs(ratio - math.exp(-2 * beta)) <= 1e-12


def test_trace_one(space2):
    for family in ("bgcs_even", "bgcs_odd", "gkcs"):
        rho = density(family, ThermalParams(0.5, 2.0), space2)
        assert abs(rho.trace() - 1.0) <= 1e-14
        assert rho.truncation_loss <= 1e-14


def test_thermal_moment_values(space2):
    p = ThermalParams(0.5, 2.0)
    assert thermal_moment("gkcs", p, 0, space2) == pytest.approx(1.0, abs=1e-15)
    z = _mp_z("gkcs", 0.5, 2.0)
    ref = mpmath.nsum(lambda n: mpmath.exp(-0.5 * 2 * (2 * n + 2)) * 2 * (n + 1) * (n + 2), [0, mpmath.inf]) / z
    assert thermal_moment("gkcs", p, 1, space2) == pytest.approx(float(ref), rel=1e-13)


def test_thermal_moment_trace_agrees(space2):
    p = ThermalParams(0.5, 2.0)
    for s in (1, 2, 3):
        a = thermal_moment("bgcs_even", p, s, space2)
        assert thermal_moment_trace("bgcs_even", p, s, space2) == pytest.approx(a, rel=1e-12)


def test_thermal_moment_truncation():
    with pytest.raises(TruncationError):
        thermal_moment("gkcs", ThermalParams(0.05, 2.0), 2, FockSpace(2.0, 16))


def test_printed_2f1_diverges():
    with pytest.raises(DivergentArgumentError):
        printed_thermal_moment("bgcs_even", ThermalParams(0.1, 2.0), 1)


def test_husimi_bounds_and_closed_form(space2):
    p = ThermalParams(0.5, 2.0)
    for lab in (bgcs_label(1.2, "even"), bgcs_label(0.3 + 0.9j, "odd"), gkcs_label(2.0, 0.4)):
        q = husimi_q(lab.kind, p, lab, space2)
        w = density(lab.kind, p, space2).diag_weights
        assert 0 <= q <= w.max()
        assert q == pytest.approx(husimi_closed_form(lab.kind, p, lab.radial), rel=1e-12)
        assert q == pytest.approx(float(husimi_radial(lab.kind, p, lab.radial)), rel=1e-12)


def test_husimi_zero_temperature(space2):
    p = ThermalParams(20.0, 2.0)
    lab = gkcs_label(3.0, 0.0)
    p0 = abs(make_state(lab, space2).coeffs[0]) ** 2
    assert husimi_q("gkcs", p, lab, space2) == pytest.approx(p0, rel=1e-12)


def test_husimi_normalization():
    assert abs(husimi_normalization("gkcs", ThermalParams(0.5, 2.0)) - 1.0) <= 1e-6
    assert abs(husimi_normalization("bgcs_odd", ThermalParams(1.0, 2.5)) - 1.0) <= 1e-6


def test_p_reconstruction(space2):
    recon, w, idx = p_reconstruction("gkcs", ThermalParams(0.5, 2.0), space2, n_max=15)
    assert list(idx) == list(range(16))
    assert np.max(np.abs(recon - w)) <= 1e-6


def test_p_zero_temperature_limit(space2):
    recon, _, _ = p_reconstruction("gkcs", ThermalParams(5.0, 2.0), space2, n_max=15)
    assert abs(recon[0] - 1.0) <= 1e-6


@pytest.mark.parametrize("beta", [0.2, 0.5, 1.0])
def test_p_positive(beta):
    x = np.linspace(0.05, 40.0, 200)
    for family in ("bgcs_even", "bgcs_odd", "gkcs"):
        assert np.all(p_function(family, ThermalParams(beta, 2.0), x) > 0)


def test_p_against_gamma_ratio():
    # w(x/q)/w(x) with the Gamma density is q^{-gamma/2} e^{x(1-1/q)/4}
    p = ThermalParams(0.5, 2.0)
    q = math.exp(-2.0)
    x = 3.0
    ref = (1 - q) / q * q ** -1.0 * math.exp(x * (1 - 1 / q) / 4)
    assert p_function("gkcs", p, x) == pytest.approx(ref, rel=1e-13)


def test_pq_consistency(space2):
    p = ThermalParams(0.5, 2.0)
    assert pq_consistency("bgcs_even", p, bgcs_label(1.0, "even"), space2) <= 1e-9
