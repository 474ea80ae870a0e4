import math

import mpmath
import numpy as np
import pytest

from isocs.errors import DomainError
from isocs.fock import (FockSpace, ModelParams, commutator, energy, gamma_from_A, generator, hamiltonian,
                        vacuum_ladder_norm, vacuum_ladder_norm_printed, wavefunction, wavefunction_gram)


@pytest.mark.parametrize("A,expected", [(0.0, 1.5), (0.75, 2.0), (2.0, 2.5)])
def test_gamma_from_A(A, expected):
    assert gamma_from_A(A) == pytest.approx(expected, abs=1e-15)


def test_model_params_from_coupling():
    assert ModelParams.from_g(1.0).gamma == pytest.approx(2.5)
    with pytest.raises(ValueError):
        ModelParams(A=2.0, g=0.5)
    with pytest.raises(DomainError):
        gamma_from_A(-1.0)


def test_energy_values():
    assert energy(0, 2.0) == 4.0
    # 2(2*1 + 2); the closed form, not the tabulated 12
    assert energy(1, 2.0) == 8.0
    gaps = np.diff(energy(np.arange(20), 2.3))
    assert np.max(np.abs(gaps - 4.0)) <= 1e-13


def test_space_validation():
    with pytest.raises(DomainError):
        FockSpace(1.0, 10)
    with pytest.raises(ValueError):
        FockSpace(2.0, 10, "diagonal")
    sp = FockSpace(2.0, 10, "odd")
    assert list(sp.indices) == [1, 3, 5, 7, 9]
    assert list(sp.interior) == [1, 3, 5, 7]


def test_generator_entries(space2):
    k0 = generator(space2, "K0").entries
    assert k0[0, 0] == 2.0
    kk = generator(space2, "Kplus").entries @ generator(space2, "Kminus").entries
    # 2 n (n + gamma - 1) at n = 1, gamma = 2
    assert kk[1, 1].real == pytest.approx(4.0, abs=1e-14)
    kp = generator(space2, "Kplus")
    assert np.array_equal(kp.dagger().entries, generator(space2, "Kminus").entries)


@pytest.mark.parametrize("gamma", [1.5, 2.0, 2.5, 7.3])
def test_commutator_closes_on_interior(gamma):
    space = FockSpace(gamma, 64)
    c = commutator(generator(space, "Kminus"), generator(space, "Kplus")).entries
    k0 = generator(space, "K0").entries
    inner = slice(0, space.trunc - 1)
    assert np.max(np.abs(c[inner, inner] - 2.0 * k0[inner, inner])) <= 1e-12 * 2 * (2 * 63 + gamma)


def test_commutator_k0_kplus(space2):
    # [K0, K+] = 2K+ in this normalization (K0 steps by 2)
    c = commutator(generator(space2, "K0"), generator(space2, "Kplus")).entries
    kp = generator(space2, "Kplus").entries
    assert np.max(np.abs(c - 2.0 * kp)) <= 1e-14 * np.max(np.abs(kp)) * 130


def test_sector_ladder_keeps_parity(space2):
    kp = generator(space2, "Kplus", "sector_ladder").entries
    rows, cols = np.nonzero(kp)
    assert np.all((rows - cols) == 2)
    with pytest.raises(ValueError):
        generator(space2, "Kminus", "bogus")


def test_extended_precision_generator(space2):
    kp = generator(space2, "Kplus", dtype=np.clongdouble)
    assert kp.entries.dtype == np.clongdouble


def test_hamiltonian_is_2k0(space2):
    assert np.array_equal(hamiltonian(space2).entries, 2.0 * generator(space2, "K0").entries)


@pytest.mark.parametrize("gamma", [1.5, 2.0, 3.1])
def test_vacuum_ladder_norm_against_matrix_power(gamma):
    space = FockSpace(gamma, 20)
    kp = generator(space, "Kplus").entries
    vac = np.zeros(20, dtype=complex)
    vac[0] = 1
    for n in range(12):
        direct = np.linalg.norm(np.linalg.matrix_power(kp, n) @ vac)
        assert vacuum_ladder_norm(n, gamma) == pytest.approx(direct, rel=1e-12)


def test_vacuum_ladder_norm_values():
    assert vacuum_ladder_norm(0, 2.0) == 1.0
    assert vacuum_ladder_norm(1, 2.0) == pytest.approx(2.0, rel=1e-15)
    assert vacuum_ladder_norm_printed(1, 2.0) == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-15)
    with pytest.raises(DomainError):
        vacuum_ladder_norm(-1, 2.0)


def test_wavefunction_ground_state_value():
    assert wavefunction(0, 2.0, 1.0) == pytest.approx(math.sqrt(2.0) * math.exp(-0.5), rel=1e-14)


def test_wavefunction_dirichlet_limit():
    assert abs(wavefunction(3, 2.0, 1e-6)) < 1e-8
    with pytest.raises(DomainError):
        wavefunction(0, 2.0, 0.0)
    with pytest.raises(DomainError):
        wavefunction(31, 2.0, 1.0)


def _mp_wavefunction(m, gamma, x):
    g = mpmath.mpf(gamma)
    norm = mpmath.sqrt(2 * mpmath.rf(g, m) / (mpmath.factorial(m) * mpmath.gamma(g)))
    return norm * x ** (g - mpmath.mpf(1) / 2) * mpmath.exp(-x * x / 2) * mpmath.hyp1f1(-m, g, x * x)


@pytest.mark.parametrize("m,x", [(0, 0.3), (4, 1.7), (10, 2.2), (10, 4.5)])
def test_wavefunction_against_mpmath(m, x):
    ref = float(_mp_wavefunction(m, 2.5, mpmath.mpf(x)))
    assert wavefunction(m, 2.5, x) == pytest.approx(ref, rel=1e-11, abs=1e-14)


def test_gram_entries_against_mpmath_quadrature():
    gram = wavefunction_gram(6, 2.0)
    for m, n in ((0, 0), (2, 5), (6, 6), (1, 4)):
        ref = mpmath.quad(lambda x: _mp_wavefunction(m, 2.0, x) * _mp_wavefunction(n, 2.0, x), [0, 3, mpmath.inf])
        assert abs(gram[m, n] - float(ref)) <= 1e-10


def test_gram_orthonormal(gamma):
    gram = wavefunction_gram(10, gamma)
    assert np.max(np.abs(gram - np.eye(11))) < 1e-8
