"""Reproducing kernels K(l1, l2) = <l1|l2> for the three families.

The canonical kernel is the overlap of two unit-normalized states.  The
printed closed forms are evaluated alongside for comparison.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .measures import radial_diagonal
from .specfun import hyp1f1
from .states import make_state, overlap, support


@dataclass(frozen=True)
class KernelEval:
    family: str
    value: complex
    args: tuple
    paper_value: complex

    @property
    def difference(self):
        return abs(self.value - self.paper_value)


def _check(family, *labels):
    for lab in labels:
        if lab.kind != family:
            raise ValueError(f"label {lab} is not a {family} label")
        if family == "bgcs_odd" and lab.z == 0:
            raise DomainError("the odd family is undefined at z = 0")


def _f(gamma, w):
    return complex(hyp1f1(1.0, gamma / 2.0 + 1.0, complex(w)))


def printed_overlap(label1, label2, gamma):
    """<label1|label2> from the printed overlap formulas (full 1F1 numerators)."""
    fam = label1.kind
    if fam == "gkcs":
        d = label1.alpha - label2.alpha
        arg = math.sqrt(label1.J * label2.J) / 4.0 * np.exp(4j * d)
        num = _f(gamma, arg) * np.exp(2j * gamma * d)
        den = math.sqrt(_f(gamma, label1.J / 4.0).real * _f(gamma, label2.J / 4.0).real)
        return complex(num / den)
    w = np.conj(label1.z) * label2.z / 4.0
    f1 = _f(gamma, abs(label1.z) ** 2 / 4.0).real
    f2 = _f(gamma, abs(label2.z) ** 2 / 4.0).real
    if fam == "bgcs_even":
        return complex(_f(gamma, w) / math.sqrt(f1 * f2))
    return complex((_f(gamma, w) - 1.0) / math.sqrt((f1 - 1.0) * (f2 - 1.0)))


def printed_kernel(label1, label2, gamma):
    """The printed reproducing-kernel formulas.

    The BGCS kernels coincide with the printed overlaps; the GKCS kernel
    carries the phase e^{-4i(alpha1 - alpha2)} and a real 1F1 argument.
    """
    if label1.kind != "gkcs":
        return printed_overlap(label1, label2, gamma)
    d = label1.alpha - label2.alpha
    num = _f(gamma, math.sqrt(label1.J * label2.J) / 4.0)
    den = math.sqrt(_f(gamma, label1.J / 4.0).real * _f(gamma, label2.J / 4.0).real)
    return complex(num / den * np.exp(-4j * d))


def kernel(family, label1, label2, space):
    """Canonical kernel <label1|label2> together with the printed value."""
    _check(family, label1, label2)
    s1 = make_state(label1, space)
    s2 = make_state(label2, space)
    return KernelEval(family, overlap(s1, s2), (label1, label2), printed_kernel(label1, label2, space.gamma))


def kernel_gram(family, labels, space):
    states = [make_state(lab, space) for lab in labels]
    coeffs = np.array([s.coeffs for s in states])
    return coeffs.conj() @ coeffs.T


def idempotence_residual(family, label1, label2, measure, space, nodes=None):
    """|int K(l1, l) K(l, l2) dnu(l) - K(l1, l2)|.

    The angular part of the intermediate integral reduces the product of
    kernels to sum_n conj(c_n(l1)) c_n(l2) M_nn with M_nn the radial
    moments of the measure, which are then taken by quadrature.
    """
    _check(family, label1, label2)
    if measure.family != family:
        raise ValueError(f"measure {measure.form} does not belong to family {family}")
    s1 = make_state(label1, space)
    s2 = make_state(label2, space)
    diag = radial_diagonal(family, measure, space, nodes=nodes)
    idx = support(family, space.trunc)
    prod = np.conj(s1.coeffs[idx]) * s2.coeffs[idx]
    integral = complex(np.sum(prod * diag[idx]))
    return abs(integral - overlap(s1, s2))
