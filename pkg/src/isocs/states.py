"""Even/odd Barut-Girardello and Gazeau-Klauder coherent states.

All three families share the unnormalized coefficients

    c_n = w^n / sqrt(rho_n),   rho_n = 4^n (gamma/2 + 1)_n,

with w = z (BGCS) restricted to even or odd n, or w = sqrt(J) e^{-i E_n alpha / n}
(GKCS, all n).  So |c_n|^2 = (x/4)^n / (gamma/2 + 1)_n with x = |z|^2 or J.

Two normalizations are available on every constructor:

canonical
    divide by the square root of the sum of |c_n|^2 over the truncated
    space, so the state has unit norm.
paper
    divide by the closed-form normalizers 1F1(1; b; x/4) (even),
    1F1(1; b; x/4) - 1 (odd) or, for GKCS, by 1F1 itself rather than its
    square root.  These vectors are generally not unit vectors.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.special import logsumexp

from .errors import TruncationError
from .fock import FockSpace, energy
from .specfun import hyp1f1, hyp1f1_parity_parts, log_hyp1f1_unit, log_pochhammer_array

FAMILIES = ("bgcs_even", "bgcs_odd", "gkcs")
TAIL_TOL = 1e-14


@dataclass(frozen=True)
class StateLabel:
    kind: str
    z: complex | None = None
    J: float | None = None
    alpha: float | None = None

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == "gkcs":
            if self.J is None or self.alpha is None or self.z is not None:
                raise ValueError("GKCS labels carry J and alpha only")
            if self.J < 0:
                raise ValueError("J must be non-negative")
        else:
            if self.z is None or self.J is not None or self.alpha is not None:
                raise ValueError("BGCS labels carry z only")
            if not np.isfinite(self.z):
                raise ValueError("z must be finite")

    @property
    def radial(self):
        """|z|^2 for BGCS, J for GKCS."""
        return float(self.J) if self.kind == "gkcs" else abs(self.z) ** 2

    def conjugate(self):
        if self.kind == "gkcs":
            return StateLabel("gkcs", J=self.J, alpha=-self.alpha)
        return StateLabel(self.kind, z=complex(self.z).conjugate())


def bgcs_label(z, parity="even"):
    return StateLabel(f"bgcs_{parity}", z=complex(z))


def gkcs_label(J, alpha):
    return StateLabel("gkcs", J=float(J), alpha=float(alpha))


@dataclass(frozen=True, eq=False)
class StateVector:
    space: FockSpace
    coeffs: np.ndarray
    label: StateLabel
    norm_mode: str
    normalizer: float
    degenerate: bool = False
    tail: float = 0.0

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def norm_sq(self):
        return float(np.vdot(self.coeffs, self.coeffs).real)


def support(family, trunc):
    """Full-ladder indices carrying a family's coefficients."""
    if family == "bgcs_even":
        return np.arange(0, trunc, 2)
    if family == "bgcs_odd":
        return np.arange(1, trunc, 2)
    if family == "gkcs":
        return np.arange(trunc)
    raise ValueError(f"unknown family {family!r}")


def log_rho(gamma, n_max):
    """log rho_n = n log 4 + log (gamma/2 + 1)_n for n = 0..n_max."""
    return np.arange(n_max + 1) * math.log(4.0) + log_pochhammer_array(gamma / 2.0 + 1.0, n_max)


def radial_moduli(family, x, space):
    """|c_n(x)|^2 (unnormalized) on a grid of radial values, shape (len(x), N).

    Entries outside the family's support are zero.  Computed in log space.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    n = np.arange(space.trunc)
    lr = log_rho(space.gamma, space.trunc - 1)
    out = np.zeros((x.size, space.trunc))
    idx = support(family, space.trunc)
    pos = x > 0
    with np.errstate(under="ignore", over="ignore"):
        out[np.ix_(pos, idx)] = np.exp(np.log(x[pos])[:, None] * n[idx] - lr[idx])
    if 0 in idx:
        out[~pos, 0] = 1.0
    return out


def truncated_normalization(family, x, space):
    """Sum of |c_n(x)|^2 over the truncated space (the canonical normalizer)."""
    return radial_moduli(family, x, space).sum(axis=1)


def normalization(family, x, gamma):
    """Untruncated canonical normalizer: the matching parity part of 1F1(1; b; x/4)."""
    b = gamma / 2.0 + 1.0
    if family == "gkcs":
        return hyp1f1(1.0, b, np.asarray(x, dtype=float) / 4.0)
    even, odd = hyp1f1_parity_parts(b, np.asarray(x, dtype=float) / 4.0)
    return even if family == "bgcs_even" else odd


def paper_normalization(family, x, gamma):
    """Closed-form normalizer attached to each family: F, F - 1 and F."""
    f = hyp1f1(1.0, gamma / 2.0 + 1.0, np.asarray(x, dtype=float) / 4.0)
    return f - 1.0 if family == "bgcs_odd" else f


def log_radial_moduli(family, x, space):
    """log |c_n(x)|^2 on the family's support, shape (len(x), len(support)); x > 0."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    idx = support(family, space.trunc)
    lr = log_rho(space.gamma, space.trunc - 1)[idx]
    return np.log(x)[:, None] * idx - lr


def log_truncated_normalization(family, x, space):
    return logsumexp(log_radial_moduli(family, x, space), axis=1)


def log_normalization(family, x, gamma):
    """log of the untruncated canonical normalizer, finite for large x."""
    b = gamma / 2.0 + 1.0
    y = np.atleast_1d(np.asarray(x, dtype=float)) / 4.0
    log_f = log_hyp1f1_unit(b, y)
    if family == "gkcs":
        return log_f
    # parity part = F(y) (1 +/- F(-y)/F(y)) / 2, and F(-y) is bounded by 1
    ratio = np.zeros_like(y)
    near = y < 700.0
    ratio[near] = hyp1f1(1.0, b, -y[near]) * np.exp(-log_f[near])
    sign = 1.0 if family == "bgcs_even" else -1.0
    out = log_f + np.log(0.5 * (1.0 + sign * ratio))
    small = y < 1.0
    if family == "bgcs_odd" and np.any(small):
        # avoid cancellation in F(y) - F(-y) near the origin
        out[small] = np.log(hyp1f1_parity_parts(b, y[small])[1])
    return out


def log_paper_normalization(family, x, gamma):
    """log F (even, GKCS) or log(F - 1) (odd), F = 1F1(1; b; x/4)."""
    y = np.atleast_1d(np.asarray(x, dtype=float)) / 4.0
    b = gamma / 2.0 + 1.0
    log_f = log_hyp1f1_unit(b, y)
    if family != "bgcs_odd":
        return log_f
    out = log_f + np.log1p(-np.exp(-log_f))
    small = y < 1.0
    if np.any(small):
        even, odd = hyp1f1_parity_parts(b, y[small])
        out[small] = np.log(even - 1.0 + odd)
    return out


def _log_coefficients(label, space):
    """(log |c_n|, phase of c_n) with -inf off the support and at z = 0, J = 0."""
    n = np.arange(space.trunc)
    idx = support(label.kind, space.trunc)
    lr = log_rho(space.gamma, space.trunc - 1)
    logmod = np.full(space.trunc, -np.inf)
    phase = np.ones(space.trunc, dtype=complex)
    if label.kind == "gkcs":
        if label.J == 0:
            logmod[0] = 0.0
        else:
            logmod = 0.5 * (n * math.log(label.J) - lr)
        phase = np.exp(-1j * energy(n, space.gamma) * label.alpha)
        return logmod, phase
    z = complex(label.z)
    if z == 0:
        if idx[0] == 0:
            logmod[0] = 0.0
        return logmod, phase
    logmod[idx] = idx * math.log(abs(z)) - 0.5 * lr[idx]
    phase[idx] = np.exp(1j * idx * np.angle(z))
    return logmod, phase


def raw_coefficients(label, space):
    """Unnormalized coefficient vector of length N."""
    logmod, phase = _log_coefficients(label, space)
    with np.errstate(under="ignore"):
        return np.exp(logmod) * phase


def make_state(label, space, norm_mode="canonical", check_tail=True):
    """Build the coherent state for ``label`` on ``space``.

    The odd family at z = 0 comes back as a zero vector with
    ``degenerate=True`` rather than raising.
    """
    if norm_mode not in ("canonical", "paper"):
        raise ValueError("norm_mode must be 'canonical' or 'paper'")
    logmod, phase = _log_coefficients(label, space)
    idx = support(label.kind, space.trunc)
    if not np.any(np.isfinite(logmod)):
        return StateVector(space, np.zeros(space.trunc, dtype=complex), label, norm_mode, 0.0, degenerate=True)
    if norm_mode == "canonical":
        # shift by the largest log modulus so tiny or huge labels neither underflow nor overflow
        top = float(np.max(logmod))
        with np.errstate(under="ignore"):
            unit = np.exp(logmod - top) * phase
        length = math.sqrt(float(np.vdot(unit, unit).real))
        log_norm = 2.0 * (top + math.log(length))
        normalizer = math.exp(log_norm) if log_norm < 709.0 else math.inf
        coeffs = unit / length
    else:
        raw = np.exp(logmod) * phase
        normalizer = float(paper_normalization(label.kind, label.radial, space.gamma))
        if normalizer == 0.0:
            return StateVector(space, np.zeros_like(raw), label, norm_mode, 0.0, degenerate=True)
        # the GKCS closed form divides by 1F1 itself, not its square root
        coeffs = raw / normalizer if label.kind == "gkcs" else raw / math.sqrt(normalizer)
    tail = float(abs(coeffs[idx[-1]]) ** 2)
    if check_tail and tail >= TAIL_TOL:
        raise TruncationError(
            f"|c_{idx[-1]}|^2 = {tail:.3g} at trunc {space.trunc}; enlarge the space", tail=tail
        )
    return StateVector(space, coeffs, label, norm_mode, normalizer, tail=tail)


def bgcs_even(z, space, norm_mode="canonical", check_tail=True):
    return make_state(bgcs_label(z, "even"), space, norm_mode, check_tail)


def bgcs_odd(z, space, norm_mode="canonical", check_tail=True):
    return make_state(bgcs_label(z, "odd"), space, norm_mode, check_tail)


def gkcs(J, alpha, space, norm_mode="canonical", check_tail=True):
    return make_state(gkcs_label(J, alpha), space, norm_mode, check_tail)


def overlap(s1, s2):
    """<s1|s2>."""
    if s1.space.gamma != s2.space.gamma or s1.space.trunc != s2.space.trunc:
        raise ValueError("states live on different Fock spaces")
    return complex(np.vdot(s1.coeffs, s2.coeffs))


def eigen_residual(state, kminus):
    """Best-fit eigenvalue <s|K-|s> and the residual ||K- s - lambda s||.

    The residual is taken over the interior indices only so the truncation
    edge does not contribute.
    """
    c = state.coeffs
    v = kminus.entries @ c
    lam = complex(np.vdot(c, v))
    r = v - lam * c
    idx = np.arange(state.space.trunc)[: state.space.trunc - 2]
    return lam, float(np.linalg.norm(r[idx]))


def pnd(state, n):
    """Probability |c_n|^2 of finding n quanta."""
    if not 0 <= n < state.space.trunc:
        raise IndexError(f"n = {n} outside the truncated space")
    return float(abs(state.coeffs[n]) ** 2)


def pnd_vector(state):
    return np.abs(state.coeffs) ** 2


def evolve(state, t):
    """Apply exp(-iHt): c_n -> exp(-i E_n t) c_n on the full ladder."""
    phases = np.exp(-1j * state.space.energies() * t)
    return StateVector(state.space, state.coeffs * phases, state.label, state.norm_mode,
                       state.normalizer, state.degenerate, state.tail)


def expectation(state, op):
    return complex(np.vdot(state.coeffs, op.entries @ state.coeffs))
