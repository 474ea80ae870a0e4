"""Radial measures for the coherent-state families and resolution-of-identity checks.

Every family has |c_n(x)|^2 = (x/4)^n / (b)_n (unnormalized) with
b = gamma/2 + 1, so after the angular integral the resolution of identity
asks for a reduced weight w with moments

    int_0^inf w(x) x^k dx = 4^k (b)_k

on the family's indices k.  The Gamma density

    w(x) = (x/4)^(gamma/2) e^(-x/4) / (4 Gamma(b))

solves this for every k at once; it is the ``elementary`` reduced weight.
The full weight multiplies back the normalization function.

The ``paper_meijer`` forms evaluate the printed Meijer-G weight
expressions; they are only ever tested, never used as oracles.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .quadrature import fixed_gauss_legendre, integrate_semi_infinite
from .specfun import (
    MeijerParams,
    log_hyp1f1_unit,
    log_meijer_g20_12,
    log_pochhammer,
    meijer_g11_12_negative,
    mellin_moment,
)
from .states import (
    log_rho,
    log_normalization,
    log_paper_normalization,
    support,
)

FORMS = (
    "elementary_even",
    "elementary_odd",
    "elementary_gk",
    "paper_meijer_even",
    "paper_meijer_odd",
    "paper_meijer_gk",
)
_FAMILY = {"even": "bgcs_even", "odd": "bgcs_odd", "gk": "gkcs"}


def reducing_params(gamma):
    """(-1; -1, gamma/2): the triple whose G^{2,0}_{1,2} is y^(gamma/2) e^(-y)."""
    return MeijerParams(-1.0, -1.0, gamma / 2.0)


def printed_params(gamma):
    """(0; 0, -gamma/2): the alternative triple attached to the even weight."""
    return MeijerParams(0.0, 0.0, -gamma / 2.0)


def log_reduced_weight(x, gamma, scale=4.0):
    u = np.asarray(x, dtype=float) / scale
    return 0.5 * gamma * np.log(u) - u - math.log(scale) - math.lgamma(gamma / 2.0 + 1.0)


def reduced_weight(x, gamma, scale=4.0):
    """(x/s)^(gamma/2) e^(-x/s) / (s Gamma(gamma/2 + 1))."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("weights are defined for x > 0")
    with np.errstate(under="ignore"):
        out = np.exp(log_reduced_weight(x, gamma, scale))
    return float(out) if out.ndim == 0 else out


def log_meijer_lambda(x, gamma, scale=4.0):
    """log of G^{2,0}_{1,2}(x/4 | -1; -1, gamma/2) / (4 Gamma(b)), the printed GKCS weight."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("weights are defined for x > 0")
    log_scale, val, _ = log_meijer_g20_12(x / scale, reducing_params(gamma))
    return log_scale + np.log(val) - math.log(scale) - math.lgamma(gamma / 2.0 + 1.0)


def meijer_lambda(x, gamma, scale=4.0):
    with np.errstate(under="ignore"):
        out = np.exp(log_meijer_lambda(x, gamma, scale))
    return float(out[0]) if np.ndim(x) == 0 else out


def log_printed_even_weight(x, gamma, scale=4.0):
    """log of |z|^gamma e^(-|z|^2/4) / 2^(gamma+2) * G^{1,1}_{1,2}(-|z|^2/4 | 0; 0, -gamma/2).

    The G^{1,1}_{1,2} factor at negative argument with these parameters is
    1F1(1; gamma/2 + 1; |z|^2/4) / Gamma(gamma/2 + 1); it is taken through
    meijer_g11_12_negative where that is finite and in log form beyond.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = x / scale
    log_pref = 0.5 * gamma * np.log(x) - y - (gamma + 2.0) * math.log(2.0)
    log_g = np.empty_like(x)
    near = y <= 600.0
    log_g[near] = np.log(meijer_g11_12_negative(y[near], 0.0, 0.0, -gamma / 2.0))
    log_g[~near] = log_hyp1f1_unit(gamma / 2.0 + 1.0, y[~near]) - math.lgamma(gamma / 2.0 + 1.0)
    return log_pref + log_g


def log_printed_odd_weight(x, gamma, scale=4.0):
    """log of the even weight minus G^{2,0}_{1,2}(|z|^2/4 | -1; -1, gamma/2) / (4 Gamma(b))."""
    log_e = log_printed_even_weight(x, gamma, scale)
    log_l = log_meijer_lambda(x, gamma, scale)
    with np.errstate(under="ignore"):
        return log_e + np.log1p(-np.exp(log_l - log_e))


def printed_even_weight(x, gamma, scale=4.0):
    return _exp_like(log_printed_even_weight(x, gamma, scale), x)


def printed_odd_weight(x, gamma, scale=4.0):
    return _exp_like(log_printed_odd_weight(x, gamma, scale), x)


def _exp_like(logv, x):
    with np.errstate(under="ignore", over="ignore"):
        out = np.exp(logv)
    return float(out[0]) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class RadialMeasure:
    form: str
    gamma: float
    scale: float = 4.0

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    @property
    def family(self):
        return _FAMILY[self.form.rsplit("_", 1)[1]]

    @property
    def printed(self):
        return self.form.startswith("paper_")

    def log_weight(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(x <= 0):
            raise DomainError("weights are defined for x > 0")
        if self.form == "paper_meijer_even":
            return log_printed_even_weight(x, self.gamma, self.scale)
        if self.form == "paper_meijer_odd":
            return log_printed_odd_weight(x, self.gamma, self.scale)
        if self.form == "paper_meijer_gk":
            # N(J)^2 lambda(J) with N(J)^2 = 1F1(1; b; J/4)
            return log_paper_normalization("gkcs", x, self.gamma) + log_meijer_lambda(x, self.gamma, self.scale)
        return log_reduced_weight(x, self.gamma, self.scale) + log_normalization(self.family, x, self.gamma)

    def weight(self, x):
        """Full weight W(x) in d^2z/pi (BGCS) or dJ dalpha (GKCS) after angular averaging."""
        return _exp_like(self.log_weight(x), x)

    def log_density(self, x, space=None, state_mode="canonical"):
        """log of W(x) divided by the normalizer of the states it is integrated against.

        The elementary weight is defined relative to whatever normalizer the
        states carry, so this is the reduced weight itself and the
        normalizer cancels exactly, truncated or not.  Printed weights are
        divided by the exact (untruncated) normalizer of ``state_mode``
        states; dividing by a truncated sum would leave integrands that
        stop decaying at the top of the space.  ``space`` is accepted for a
        uniform call signature.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if not self.printed:
            return log_reduced_weight(x, self.gamma, self.scale)
        if state_mode == "paper":
            log_norm = log_paper_normalization(self.family, x, self.gamma)
            if self.family == "gkcs":
                # the GKCS prefactor is 1/F, so |c_n|^2 carries 1/F^2
                log_norm = 2.0 * log_norm
        elif state_mode != "canonical":
            raise ValueError("state_mode must be 'canonical' or 'paper'")
        else:
            log_norm = log_normalization(self.family, x, self.gamma)
        return self.log_weight(x) - log_norm

    def density(self, x, space=None, state_mode="canonical"):
        return _exp_like(self.log_density(x, space, state_mode), x)


@dataclass(frozen=True)
class MomentTarget:
    k: int
    target: float

    def __post_init__(self):
        if not self.target > 0:
            raise ValueError("moment targets must be positive")


def default_targets(family, gamma, count=11):
    """4^k (b)_k on the family's first ``count`` indices."""
    ks = support(family, 2 * count if family != "gkcs" else count)[:count]
    b = gamma / 2.0 + 1.0
    return [MomentTarget(int(k), math.exp(k * math.log(4.0) + log_pochhammer(b, int(k))[0])) for k in ks]


@dataclass(frozen=True)
class MomentReport:
    form: str
    ks: tuple
    values: tuple
    deviations: tuple
    max_deviation: float


def moment_check(measure, targets, state_mode="paper"):
    """Relative deviation of int w(x) x^k dx from each target.

    ``w`` is the measure's density against ``state_mode`` states on the
    untruncated space.  Printed weights are paired with the normalizers
    printed next to them by default.
    """
    if not targets:
        raise ValueError("need at least one moment target")
    f = lambda x: measure.density(x, None, state_mode)
    ks, vals, devs = [], [], []
    for t in targets:
        v = mellin_moment(f, t.k + 1.0, scale=4.0 * (measure.gamma / 2.0 + 1.0 + t.k))
        ks.append(t.k)
        vals.append(v)
        devs.append(abs(v - t.target) / t.target)
    return MomentReport(measure.form, tuple(ks), tuple(vals), tuple(devs), max(devs))


def normalized_moments(measure, ks, state_mode="canonical", nodes=None, x_max=None):
    """int density(x) x^k / rho_k dx for each k in ``ks`` (rho_k = 4^k (b)_k).

    These are the radial integrals left after the angular selection; for a
    weight satisfying the moment condition every entry is 1.  With
    ``nodes`` set, a fixed composite Gauss-Legendre rule with that many
    nodes on [0, x_max] replaces the adaptive semi-infinite one.
    """
    ks = np.asarray(ks, dtype=int)
    lr = log_rho(measure.gamma, int(ks.max()))[ks]

    def integrand(x):
        pos = np.maximum(x, 1e-300)
        # one exponent keeps huge x^k / rho_k and tiny weights from over/underflowing
        logs = measure.log_density(pos, None, state_mode)[:, None] + np.log(pos)[:, None] * ks - lr
        with np.errstate(under="ignore"):
            out = np.exp(logs)
        out[x <= 0] = 0.0
        return out

    # mean of the top moment's Gamma integrand
    centre = measure.scale * (measure.gamma / 2.0 + 1.0 + ks.max())
    if nodes is not None:
        if x_max is None:
            x_max = 3.0 * centre + 200.0
        order = 16
        return fixed_gauss_legendre(integrand, 0.0, x_max, panels=max(1, nodes // order), order=order)
    value, _ = integrate_semi_infinite(integrand, centre, rtol=1e-12)
    return value


def radial_diagonal(family, measure, space, state_mode="canonical", nodes=None, x_max=None):
    """Diagonal M_nn of the resolution integral for n = 0..N-1 (zero off the family's support)."""
    idx = support(family, space.trunc)
    out = np.zeros(space.trunc)
    out[idx] = normalized_moments(measure, idx, state_mode, nodes, x_max)
    return out


def identity_resolution_diagonal(family, measure, space, state_mode="canonical", nodes=None):
    return radial_diagonal(family, measure, space, state_mode, nodes)


def identity_resolution_residual(family, measure, space, state_mode="canonical", n_max=None,
                                 sector_only=True, nodes=None):
    """max |M_nn - 1| over interior indices.

    ``sector_only`` restricts to the family's own parity sector; with it
    off the full ladder is used, where the other parity's entries are 0.
    """
    if measure.family != family:
        raise ValueError(f"measure {measure.form} does not belong to family {family}")
    diag = radial_diagonal(family, measure, space, state_mode, nodes)
    idx = support(family, space.trunc) if sector_only else np.arange(space.trunc)
    idx = idx[idx <= space.trunc - 3]
    if n_max is not None:
        idx = idx[idx <= n_max]
    return float(np.max(np.abs(diag[idx] - 1.0)))
