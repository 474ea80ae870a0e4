"""Thermal density operators diagonal in the Fock basis, and their phase-space pictures.

For a family with Fock indices S (even, odd or all n),

    rho = Z^-1 sum_{n in S} exp(-beta E_n) |n><n|,   E_n = 2(2n + gamma).

Everything here is checked against direct Boltzmann sums: partition
functions, moments of K-K+, the Husimi function <z|rho|z> and the
Glauber-Sudarshan P function fixed by the moment condition.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.special import logsumexp

from .errors import DomainError, TruncationError
from .fock import energy, generator
from .measures import log_reduced_weight, log_meijer_lambda, normalized_moments
from .quadrature import integrate_semi_infinite
from .specfun import hyp1f1, hyp2f1, log_hyp1f1_unit
from .states import log_normalization, log_rho, make_state, support

GAPS = {"bgcs_even": 8.0, "bgcs_odd": 8.0, "gkcs": 4.0}
FIRST = {"bgcs_even": 0, "bgcs_odd": 1, "gkcs": 0}
STEP = {"bgcs_even": 2, "bgcs_odd": 2, "gkcs": 1}
SUM_DROP = 39.2  # nats: terms below exp(-39.2) ~ 1e-17 of the leading one are dropped


@dataclass(frozen=True)
class ThermalParams:
    beta: float
    gamma: float

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError("beta must be positive")
        if not self.gamma > 1:
            raise DomainError("Bargmann index must exceed 1")


def _check_family(family):
    if family not in GAPS:
        raise ValueError(f"unknown family {family!r}")


def boltzmann_indices(family, beta, extra=0):
    """Family indices up to where exp(-beta E_n) has dropped by ~1e-17."""
    count = int(math.ceil(SUM_DROP / (beta * GAPS[family]))) + 1 + extra
    if count > 10_000_000:
        raise DomainError("beta too small for a direct Boltzmann sum")
    return FIRST[family] + STEP[family] * np.arange(count)


def partition_function(family, p):
    """Z = sum over the family's indices of exp(-beta E_n), summed directly."""
    _check_family(family)
    n = boltzmann_indices(family, p.beta)
    terms = np.exp(-p.beta * energy(n, p.gamma))
    return float(np.sum(terms[::-1]))


def printed_partition_function(family, p):
    b, g = p.beta, p.gamma
    if family == "bgcs_even":
        return math.exp(-2 * b * g) / (1 - math.exp(-8 * b))
    if family == "bgcs_odd":
        return math.exp(-2 * b * (g + 1)) / (1 - math.exp(-8 * b))
    return math.exp(-2 * b * g) / (1 - math.exp(-4 * b))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    family: str
    params: object
    space: object
    diag_weights: np.ndarray
    Z: float

    def __post_init__(self):
        self.diag_weights.setflags(write=False)

    @property
    def truncation_loss(self):
        """Boltzmann weight lying above the truncated space."""
        return max(0.0, 1.0 - float(np.sum(self.diag_weights)))

    def matrix(self):
        return np.diag(self.diag_weights).astype(complex)

    def trace(self):
        return float(np.trace(self.matrix()).real)


def density(family, p, space):
    _check_family(family)
    Z = partition_function(family, p)
    w = np.zeros(space.trunc)
    idx = support(family, space.trunc)
    w[idx] = np.exp(-p.beta * energy(idx, p.gamma)) / Z
    return DensityOperator(family, p, space, w, Z)


def thermal_moment(family, p, s, space, tail_tol=1e-12):
    """Tr(rho (K-K+)^s) = sum_n w_n [2(n+1)(n+gamma)]^s, by direct sum.

    Raises TruncationError when the last summand in the space is not
    negligible against the sum.
    """
    if s < 0 or s > 8:
        raise DomainError("s must lie in 0..8")
    rho = density(family, p, space)
    idx = support(family, space.trunc)
    n = idx.astype(float)
    terms = rho.diag_weights[idx] * (2.0 * (n + 1.0) * (n + p.gamma)) ** s
    total = float(np.sum(terms[::-1]))
    if terms[-1] > tail_tol * total:
        raise TruncationError(f"moment summand at n = {idx[-1]} is {terms[-1] / total:.3g} of the sum",
                              tail=float(terms[-1] / total))
    return total


def thermal_moment_trace(family, p, s, space):
    """Same moment as a matrix trace Tr(rho (K- K+)^s), for cross-checking."""
    rho = density(family, p, space)
    km = generator(space, "Kminus").entries
    kp = generator(space, "Kplus").entries
    prod = np.linalg.matrix_power(km @ kp, s)
    # the top row of K-K+ is cut by truncation; it carries weight ~ w_{N-1}
    return float(np.trace(rho.matrix() @ prod).real)


def printed_thermal_moment(family, p, s, argument=None):
    """The printed 2F1 closed form for Tr(rho (K-K+)^s), even and odd families.

    ``argument`` replaces only the 2F1 argument (default e^{4 beta}, as
    printed); hyp2f1 raises DivergentArgumentError outside the unit disc.
    """
    b, g = p.beta, p.gamma
    x = math.exp(4 * b) if argument is None else argument
    if family == "bgcs_even":
        pref = 2 * (4 * math.exp(4 * b)) ** s * math.sinh(math.exp(4 * b))
        pref *= math.exp(math.lgamma(g / 2 + s + 1) - math.lgamma(g / 2 + 1))
        return pref * hyp2f1(1.0, g / 2 + s + 1, g / 2 + 1, x)
    if family == "bgcs_odd":
        pref = (4 * math.exp(4 * b)) ** (s + 1) * math.sinh(math.exp(4 * b))
        pref *= math.exp(math.lgamma(g / 2 + s + 2) - math.lgamma(g / 2 + 2)) / 2
        return pref * hyp2f1(1.0, g / 2 + s + 2, g / 2 + 2, x)
    raise ValueError("no printed thermal moment for this family")


def thermal_mean(rho, op):
    return complex(np.trace(rho.matrix() @ op.entries))


# ---------------------------------------------------------------------------
# Husimi Q


def log_boltzmann_moduli_sum(family, p, x):
    """log sum_n w_n (x/4)^n / (b)_n over the family's untruncated indices."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("radial variable must be positive")
    # enough terms for both the Boltzmann decay and the |c_n|^2 peak near n ~ x/4
    y_max = float(x.max()) / 4.0
    extra = int(y_max + 12.0 * math.sqrt(y_max + 1.0) + 40.0)
    n = boltzmann_indices(family, p.beta, extra // STEP[family])
    lr = log_rho(p.gamma, int(n[-1]))[n]
    log_w = -p.beta * energy(n, p.gamma) - math.log(partition_function(family, p))
    return logsumexp(log_w + np.log(x)[:, None] * n - lr, axis=1)


def husimi_radial(family, p, x):
    """Q as a function of x = |z|^2 or J on the untruncated space."""
    _check_family(family)
    out = np.exp(log_boltzmann_moduli_sum(family, p, x) - log_normalization(family, x, p.gamma))
    return float(out[0]) if np.ndim(x) == 0 else out


def husimi_q(family, p, label, space):
    """<label| rho |label> with the canonical state on ``space``."""
    state = make_state(label, space)
    if state.degenerate:
        raise DomainError("the odd family is undefined at z = 0")
    rho = density(family, p, space)
    return float(np.sum(rho.diag_weights * np.abs(state.coeffs) ** 2))


def printed_husimi(family, p, x):
    """The printed Q ratio forms."""
    b = p.gamma / 2.0 + 1.0
    y = np.asarray(x, dtype=float) / 4.0
    q = math.exp(-4 * p.beta)
    if family == "gkcs":
        return (1 - q) * np.exp(log_hyp1f1_unit(b, q * y) - log_hyp1f1_unit(b, y))
    pre = 1 - math.exp(-8 * p.beta)
    if family == "bgcs_even":
        return pre * np.exp(log_hyp1f1_unit(b, q * y) - log_hyp1f1_unit(b, y))
    return pre * (hyp1f1(1.0, b, q * y) - 1.0) / (hyp1f1(1.0, b, y) - 1.0)


def husimi_closed_form(family, p, x):
    """Closed form of the direct sum: the parity parts of 1F1 replace 1F1.

    Even: (1 - e^{-8b}) N_e(q x) / N_e(x); odd: (1 - e^{-8b}) e^{4b} N_o(q x) / N_o(x);
    GKCS: (1 - e^{-4b}) F(q x/4) / F(x/4), with q = e^{-4 beta}.
    """
    q = math.exp(-4 * p.beta)
    x = np.asarray(x, dtype=float)
    ratio = np.exp(log_normalization(family, q * x, p.gamma) - log_normalization(family, x, p.gamma))
    if family == "gkcs":
        out = (1 - q) * ratio
    elif family == "bgcs_even":
        out = (1 - q * q) * ratio
    else:
        out = (1 - q * q) / q * ratio
    return float(out[0]) if x.ndim == 0 else out


def husimi_normalization(family, p, rtol=1e-12):
    """int Q dnu: Q times the full weight w(x) N(x), integrated over x.

    The normalizer cancels, so the integrand is w(x) sum_n w_n |c_n(x)|^2
    in log form; the angular integral contributes 1.
    """
    g = p.gamma

    def integrand(x):
        out = np.zeros_like(x)
        pos = x > 0
        with np.errstate(under="ignore"):
            out[pos] = np.exp(log_reduced_weight(x[pos], g) + log_boltzmann_moduli_sum(family, p, x[pos]))
        return out

    value, _ = integrate_semi_infinite(integrand, 4.0 * (g / 2.0 + 1.0), rtol=rtol)
    return float(value)


# ---------------------------------------------------------------------------
# Glauber-Sudarshan P


def p_constant(family, p):
    """C in P(x) = C w(x/q) / w(x), fixed by the lowest Boltzmann weight."""
    q = math.exp(-4 * p.beta)
    if family == "gkcs":
        return (1 - q) / q
    if family == "bgcs_even":
        return (1 - q * q) / q
    return (1 - q * q) / (q * q)


def log_p_function(family, p, x):
    """log P(x) for the canonical P function.

    Solving int w(x) P(x) x^n dx = rho_n w_n on the family's indices with
    the Gamma-density weight w gives w(x) P(x) = C w(x/q), q = e^{-4 beta}.
    """
    _check_family(family)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("P is defined for x > 0")
    q = math.exp(-4 * p.beta)
    return math.log(p_constant(family, p)) + log_reduced_weight(x / q, p.gamma) - log_reduced_weight(x, p.gamma)


def p_function(family, p, x):
    out = np.exp(log_p_function(family, p, x))
    return float(out) if np.ndim(x) == 0 else out


def log_printed_p_function(family, p, x):
    """log of (1 - e^{-k beta}) G(e^{-4 beta} x/4) / G(x/4), G = G^{2,0}_{1,2}(. | -1; -1, gamma/2).

    k is 8 for the BGCS families and 4 for GKCS.  The Meijer functions are
    evaluated by contour integration (through the printed lambda weight,
    whose 1/(4 Gamma) prefactor cancels in the ratio).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    q = math.exp(-4 * p.beta)
    k = 4.0 if family == "gkcs" else 8.0
    return math.log1p(-math.exp(-k * p.beta)) + log_meijer_lambda(q * x, p.gamma) - log_meijer_lambda(x, p.gamma)


class _PDensity:
    """Adapter giving w(x) P(x) the interface normalized_moments expects.

    w P = C w(x/q) lives on the scale 4q, which is where the quadrature starts.
    """

    def __init__(self, family, p, log_p):
        self.family, self.params, self.gamma, self._log_p = family, p, p.gamma, log_p
        self.scale = 4.0 * math.exp(-4.0 * p.beta)

    def log_density(self, x, space=None, state_mode="canonical"):
        return log_reduced_weight(x, self.gamma) + self._log_p(self.family, self.params, x)


def p_reconstruction(family, p, space, n_max=None, printed=False):
    """Diagonal of int w P |z><z| dnu next to the Boltzmann weights it should equal.

    Returns ``(reconstructed, weights, indices)`` over the family's indices
    up to ``n_max``.
    """
    idx = support(family, space.trunc)
    if n_max is not None:
        idx = idx[idx <= n_max]
    dens = _PDensity(family, p, log_printed_p_function if printed else log_p_function)
    recon = normalized_moments(dens, idx)
    rho = density(family, p, space)
    return recon, rho.diag_weights[idx], idx


def pq_consistency(family, p, label, space):
    """|int |<xi|z>|^2 P dnu(z) - Q(xi)| through the angular reduction.

    |<xi|z>|^2 averaged over the angle of z leaves sum_n |c_n(xi)|^2 |c_n(z)|^2,
    so the integral is sum_n |c_n(xi)|^2 R_n with R_n the reconstructed
    diagonal of rho.
    """
    recon, _, idx = p_reconstruction(family, p, space)
    state = make_state(label, space)
    lhs = float(np.sum(np.abs(state.coeffs[idx]) ** 2 * recon))
    return abs(lhs - husimi_q(family, p, label, space))

