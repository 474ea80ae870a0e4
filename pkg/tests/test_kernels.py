import cmath

import mpmath
import numpy as np
import pytest

from isocs.errors import DomainError
from isocs.kernels import idempotence_residual, kernel, kernel_gram, printed_kernel, printed_overlap
from isocs.measures import RadialMeasure
from isocs.states import bgcs_label, gkcs_label

LABELS = {
    "bgcs_even": [bgcs_label(z, "even") for z in (1.0, 0.5 + 0.5j, 1.5j, -0.7, 0.2 - 1.1j)],
    "bgcs_odd": [bgcs_label(z, "odd") for z in (1.0, 0.5 + 0.5j, 1.5j, -0.7, 0.2 - 1.1j)],
    "gkcs": [gkcs_label(J, a) for J, a in ((1.0, 0.0), (4.0, 0.3), (2.0, 0.1), (0.5, -1.0), (3.0, 2.0))],
}
_FORM = {"bgcs_even": "elementary_even", "bgcs_odd": "elementary_odd", "gkcs": "elementary_gk"}


@pytest.mark.parametrize("family", list(LABELS))
def test_kernel_diagonal_and_hermiticity(space2, family):
    labs = LABELS[family]
    for a in labs:
        assert abs(kernel(family, a, a, space2).value - 1.0) <= 1e-12
    for a, b in zip(labs, labs[1:]):
        assert abs(np.conj(kernel(family, a, b, space2).value) - kernel(family, b, a, space2).value) <= 1e-15


@pytest.mark.parametrize("family", list(LABELS))
def test_kernel_gram_psd(space2, family):
    eig = np.linalg.eigvalsh(kernel_gram(family, LABELS[family], space2))
    assert eig.min() >= -1e-10


def test_bgcs_printed_kernel_matches_overlap(space2):
    for family in ("bgcs_even", "bgcs_odd"):
        a, b = LABELS[family][1], LABELS[family][2]
        k = kernel(family, a, b, space2)
        # the even kernel carries the full 1F1, so it picks up odd terms the state does not have
        assert k.paper_value == printed_overlap(a, b, 2.0)
        assert k.difference > 1e-3


def test_gk_overlap_phase_against_mpmath(space2):
    a, b = gkcs_label(2.0, 0.1), gkcs_label(3.0, -0.4)
    # direct sum with the energy phases e^{i E_n (a1 - a2)}
    d = 0.1 - (-0.4)
    ref = mpmath.fsum(mpmath.sqrt(mpmath.mpf(6)) ** n / (4 ** n * mpmath.rf(2, n)) * mpmath.expj(2 * (2 * n + 2) * d)
                      for n in range(90))
    ref /= mpmath.sqrt(mpmath.hyp1f1(1, 2, 0.5) * mpmath.hyp1f1(1, 2, 0.75))
    assert abs(kernel("gkcs", a, b, space2).value - complex(ref)) <= 1e-13
    # the printed kernel carries e^{-4i d} instead of the energy phases
    pk = printed_kernel(a, b, 2.0)
    assert abs(cmath.phase(pk) - cmath.phase(cmath.exp(-4j * d))) <= 1e-12


def test_odd_kernel_at_origin(space2):
    with pytest.raises(DomainError):
        kernel("bgcs_odd", bgcs_label(0.0, "odd"), bgcs_label(1.0, "odd"), space2)
    with pytest.raises(ValueError):
        kernel("gkcs", bgcs_label(1.0, "even"), gkcs_label(1.0, 0.0), space2)


@pytest.mark.parametrize("family", list(LABELS))
def test_idempotence(space2, family):
    m = RadialMeasure(_FORM[family], 2.0)
    labs = LABELS[family]
    for a, b in ((labs[0], labs[0]), (labs[1], labs[2]), (labs[3], labs[4])):
        assert idempotence_residual(family, a, b, m, space2) < 1e-6


def test_idempotence_converges_with_nodes(space2):
    m = RadialMeasure("elementary_gk", 2.0)
    a, b = LABELS["gkcs"][1], LABELS["gkcs"][2]
    r = [idempotence_residual("gkcs", a, b, m, space2, nodes=n) for n in (32, 64, 128)]
    assert r[2] < r[1] < r[0] and r[2] < 1e-9


def test_idempotence_detects_wrong_measure(space2):
    m = RadialMeasure("elementary_gk", 2.0, scale=5.0)
    a = LABELS["gkcs"][1]
    assert idempotence_residual("gkcs", a, a, m, space2) > 1e-2
