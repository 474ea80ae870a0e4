"""Special functions: log-gamma, Pochhammer, 1F1 (with parity split), 2F1,
and the Meijer function G^{2,0}_{1,2} by Mellin-Barnes contour integration.

Hypergeometric series are summed term by term until two consecutive terms
fall below ``rel_tol`` times the partial sum.  Arguments may be NumPy
arrays; every element is summed independently so an element's value does
not depend on what else is in the array.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy import special as _sp

from .errors import ConvergenceError, DivergentArgumentError, DomainError, DivergentIntegralError
from .quadrature import gauss_legendre, integrate_semi_infinite

KUMMER_THRESHOLD = 0.0  # every negative real argument: the transformed series has no cancellation
POCH_DIRECT_MAX = 50


@dataclass(frozen=True)
class SeriesControl:
    max_terms: int = 10_000
    rel_tol: float = 1e-14
    abs_floor: float = 1e-300

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.abs_floor < 0:
            raise ValueError("abs_floor must be >= 0")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class MeijerParams:
    """Parameters (a1; b1, b2) of G^{2,0}_{1,2}."""

    a1: float
    b1: float
    b2: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.a1, self.b1, self.b2)):
            raise ValueError("Meijer parameters must be finite")

    def reduced(self):
        """Gamma arguments left after cancelling a1 against b1 or b2.

        Returns ``(numerator_shifts, denominator_shifts)``.
        """
        num = [self.b1, self.b2]
        den = [self.a1]
        for b in list(num):
            if den and b == den[0]:
                num.remove(b)
                den = []
                break
        return tuple(num), tuple(den)

    def strip_left(self):
        """Left edge of the fundamental strip (poles of the surviving numerator)."""
        num, _ = self.reduced()
        return -min(num)


# ---------------------------------------------------------------------------
# Gamma and Pochhammer


def ln_gamma(x):
    """ln Gamma(x) for x > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0) or np.any(~np.isfinite(arr)):
        raise DomainError("ln_gamma requires finite x > 0")
    out = _sp.gammaln(arr)
    return float(out) if out.ndim == 0 else out


def log_pochhammer(a, n):
    """Return ``(log|(a)_n|, sign)``; sign is 0 when the product vanishes."""
    n = int(n)
    if n < 0:
        raise DomainError("Pochhammer index must be non-negative")
    if n == 0:
        return 0.0, 1
    if a <= 0 and float(a).is_integer() and -a < n:
        return -math.inf, 0
    if n <= POCH_DIRECT_MAX:
        total = 0.0
        sign = 1
        for k in range(n):
            f = a + k
            if f < 0:
                sign = -sign
            total += math.log(abs(f))
        return total, sign
    # (a)_n = Gamma(a+n)/Gamma(a); gammasgn covers negative non-integer a
    sign = int(_sp.gammasgn(a + n) * _sp.gammasgn(a))
    return float(_sp.gammaln(a + n) - _sp.gammaln(a)), sign


def pochhammer(a, n, log=False):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1).

    With ``log=True`` returns ``(log|(a)_n|, sign)`` instead, which never
    overflows.
    """
    logval, sign = log_pochhammer(a, n)
    if log:
        return logval, sign
    if sign == 0:
        return 0.0
    if n <= POCH_DIRECT_MAX:
        val = 1.0
        for k in range(int(n)):
            val *= a + k
        if math.isinf(val):
            raise OverflowError(f"({a})_{n} overflows; use log=True")
        return val
    if logval > 709.78:
        raise OverflowError(f"({a})_{n} overflows; use log=True")
    return sign * math.exp(logval)


def log_pochhammer_array(a, n_max):
    """log (a)_n for n = 0..n_max, for a > 0 (cumulative sums, no overflow)."""
    if a <= 0:
        raise DomainError("log_pochhammer_array requires a > 0")
    out = np.zeros(n_max + 1)
    if n_max > 0:
        out[1:] = np.cumsum(np.log(a + np.arange(n_max)))
    return out


# ---------------------------------------------------------------------------
# Confluent hypergeometric 1F1


def _check_b(b):
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"b = {b} is a non-positive integer")


def _series(ratio, x, control, what):
    """Sum a hypergeometric-type series with term ratio ``ratio(k, x)``.

    ``ratio(k, x)`` returns t_{k+1}/t_k given t_0 = 1.  Elementwise and
    order-independent across the array.
    """
    x = np.asarray(x)
    dtype = np.result_type(x.dtype, float)
    term = np.ones(x.shape, dtype=dtype)
    total = np.ones(x.shape, dtype=dtype)
    active = np.ones(x.shape, dtype=bool)
    small_prev = np.zeros(x.shape, dtype=bool)
    for k in range(control.max_terms):
        idx = np.nonzero(active)
        term[idx] = term[idx] * ratio(k, x[idx])
        total[idx] = total[idx] + term[idx]
        mag = np.abs(term[idx])
        small = (mag <= control.rel_tol * np.abs(total[idx])) | (mag <= control.abs_floor)
        done = small & small_prev[idx]
        small_prev[idx] = small
        finished = tuple(i[done] for i in idx)
        active[finished] = False
        if not active.any():
            return total
        if not np.all(np.isfinite(total[idx])):
            raise OverflowError(f"{what}: partial sums overflow")
    raise ConvergenceError(
        f"{what}: no convergence after {control.max_terms} terms",
        error_estimate=float(np.max(np.abs(term[active]))),
        terms=control.max_terms,
    )


def _unwrap(out, scalar):
    if scalar:
        val = out.reshape(-1)[0]
        return complex(val) if np.iscomplexobj(out) else float(val)
    return out


def hyp1f1(a, b, x, control=DEFAULT_CONTROL):
    """Kummer's function 1F1(a; b; x).

    Negative real arguments go through Kummer's transformation
    e^x 1F1(b-a; b; -x); complex arguments are summed directly.
    """
    _check_b(b)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x))
    ratio = lambda k, t: (a + k) / ((b + k) * (k + 1.0)) * t  # noqa: E731
    if np.iscomplexobj(x):
        return _unwrap(_series(ratio, x, control, "hyp1f1"), scalar)
    x = x.astype(float)
    out = np.empty_like(x)
    neg = x < KUMMER_THRESHOLD
    if np.any(~neg):
        out[~neg] = _series(ratio, x[~neg], control, "hyp1f1")
    if np.any(neg):
        ratio_k = lambda k, t: (b - a + k) / ((b + k) * (k + 1.0)) * t  # noqa: E731
        out[neg] = np.exp(x[neg]) * _series(ratio_k, -x[neg], control, "hyp1f1")
    return _unwrap(out, scalar)


LOG_SERIES_MAX = 30.0


def log_hyp1f1_unit(b, y, control=DEFAULT_CONTROL):
    """log 1F1(1; b; y) for y >= 0 and b > 1, finite far past overflow of 1F1 itself.

    Small y sums the series; larger y uses
    1F1(1; b; y) = (b-1) Gamma(b-1) y^(1-b) e^y P(b-1, y)
    with P the regularized lower incomplete gamma function.
    """
    if not b > 1:
        raise DomainError("log_hyp1f1_unit needs b > 1")
    scalar = np.ndim(y) == 0
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if np.any(y < 0):
        raise DomainError("log_hyp1f1_unit needs y >= 0")
    out = np.empty_like(y)
    small = y <= LOG_SERIES_MAX
    if np.any(small):
        out[small] = np.log(hyp1f1(1.0, b, y[small], control))
    big = ~small
    if np.any(big):
        yb = y[big]
        out[big] = (math.log(b - 1.0) + _sp.gammaln(b - 1.0) + (1.0 - b) * np.log(yb) + yb
                    + np.log(_sp.gammainc(b - 1.0, yb)))
    return _unwrap(out, scalar)


def hyp1f1_parity_parts(b, x, control=DEFAULT_CONTROL, cross_check=True):
    """Even- and odd-index parts of 1F1(1; b; x) = sum_m x^m / (b)_m.

    Returns ``(even, odd)`` with even = sum x^{2m}/(b)_{2m} and
    odd = sum x^{2m+1}/(b)_{2m+1}.  Both are summed directly; the
    reflection form (F(x) +/- F(-x))/2 is used as a consistency check.
    """
    _check_b(b)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x))
    if not np.iscomplexobj(x):
        x = x.astype(float)
    x2 = x * x
    even = _series(lambda k, t: t / ((b + 2 * k) * (b + 2 * k + 1.0)), x2, control, "even part")
    odd = (x / b) * _series(lambda k, t: t / ((b + 2 * k + 1.0) * (b + 2 * k + 2.0)), x2,
                            control, "odd part")
    if cross_check:
        fp = np.atleast_1d(hyp1f1(1.0, b, x, control))
        fm = np.atleast_1d(hyp1f1(1.0, b, -x, control))
        bound = 1e-10 * (np.abs(fp) + np.abs(fm)) + 1e-300
        if np.any(np.abs(even - 0.5 * (fp + fm)) > bound) or np.any(np.abs(odd - 0.5 * (fp - fm)) > bound):
            raise ConvergenceError("parity parts disagree with the reflection form")
    return _unwrap(even, scalar), _unwrap(odd, scalar)


# ---------------------------------------------------------------------------
# Gauss 2F1

PFAFF_THRESHOLD = 0.9


def hyp2f1(a, b, c, x, control=DEFAULT_CONTROL):
    """Gauss 2F1(a, b; c; x) for real |x| < 1.

    |x| <= 0.9 is summed directly; x in (-1, -0.9) uses the Pfaff
    transformation (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)); x in (0.9, 1) is
    summed directly with a term budget scaled to the slower convergence.
    |x| >= 1 raises DivergentArgumentError.
    """
    _check_b(c)
    x = float(x)
    if not math.isfinite(x) or abs(x) >= 1.0:
        raise DivergentArgumentError(f"2F1 series diverges at |x| = {abs(x):.6g} >= 1", argument=x)

    def direct(a_, b_, t, ctl):
        ratio = lambda k, u: (a_ + k) * (b_ + k) / ((c + k) * (k + 1.0)) * u  # noqa: E731
        return float(_series(ratio, np.array([t]), ctl, "hyp2f1")[0])

    if x < -PFAFF_THRESHOLD:
        return (1.0 - x) ** (-a) * direct(a, c - b, x / (x - 1.0), control)
    if x > PFAFF_THRESHOLD:
        # geometric tail is ~ term / (1 - x): tighten the stopping rule to match
        needed = int(60.0 / -math.log(x)) + 1000
        ctl = SeriesControl(max(control.max_terms, needed), control.rel_tol * (1.0 - x), control.abs_floor)
        return direct(a, b, x, ctl)
    return direct(a, b, x, control)


# ---------------------------------------------------------------------------
# Meijer G^{2,0}_{1,2} via Mellin-Barnes


def mellin_gamma_ratio(p, s):
    """Gamma(b1+s) Gamma(b2+s) / Gamma(a1+s), with equal parameters cancelled."""
    num, den = p.reduced()
    logv = sum(_sp.gammaln(b + s) for b in num) - sum(_sp.gammaln(a + s) for a in den)
    sign = np.prod([_sp.gammasgn(b + s) for b in num]) * np.prod([_sp.gammasgn(a + s) for a in den] or [1.0])
    return float(sign * np.exp(logv))


def _log_kernel(p, s, logx):
    """log of Gamma-ratio(s) * x^(-s) for complex s (principal branches)."""
    num, den = p.reduced()
    out = -s * logx
    for b in num:
        out = out + _sp.loggamma(b + s)
    for a in den:
        out = out - _sp.loggamma(a + s)
    return out


def _saddle_sigma(p, logx, left):
    """Real abscissa minimising the kernel along the real axis (vectorized)."""
    num, den = p.reduced()

    def dphi(sig):
        out = -logx + sum(_sp.digamma(b + sig) for b in num)
        for a in den:
            out = out - _sp.digamma(a + sig)
        return out

    # stay right of the zeros of 1/Gamma(a1+s) as well as the poles
    left = max([left] + [-a for a in den])
    lo = np.full_like(logx, left + 1e-3)
    hi = np.maximum(lo + 1.0, np.exp(logx) + 10.0 + abs(left))
    # dphi is increasing for the parameter families handled here
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        pos = dphi(mid) > 0
        hi = np.where(pos, mid, hi)
        lo = np.where(pos, lo, mid)
        if np.all(hi - lo < 1e-10 * np.maximum(1.0, np.abs(hi))):
            break
    sig = 0.5 * (lo + hi)
    # keep clear of the pole so the contour integrand stays resolvable
    return np.maximum(sig, left + 0.05)


def _curvature(p, sig):
    num, den = p.reduced()
    out = sum(_sp.polygamma(1, b + sig) for b in num)
    for a in den:
        out = out - _sp.polygamma(1, a + sig)
    return np.maximum(out, 1e-12)


def log_meijer_g20_12(x, p, sigma=None, rtol=1e-12, max_refine=12):
    """Return ``(log_scale, value_scaled, error)`` with G(x) = exp(log_scale) * value_scaled.

    The contour Re s = sigma is placed at the real saddle of the kernel
    unless ``sigma`` is given; there the integrand is non-oscillatory near
    t = 0 and the scaled integral is O(1), so G stays representable in log
    form far beyond double range.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("Meijer G argument must be positive")
    num, den = p.reduced()
    if len(num) - len(den) < 1:
        raise DomainError("Mellin-Barnes integrand does not decay for these parameters")
    left = p.strip_left()
    logx = np.log(x)
    if sigma is None and den and -den[0] > left:
        # 1/Gamma(a1+s) vanishes inside the strip: G can change sign and the
        # real-axis kernel has no saddle; only the reducing triples are needed
        raise DomainError("a1 below the strip edge: sign-changing Meijer G is not supported")
    if sigma is None:
        sig = _saddle_sigma(p, logx, left)
        width = 1.0 / np.sqrt(_curvature(p, sig))
    else:
        if sigma <= left:
            raise DomainError(f"contour abscissa {sigma} outside the strip (> {left})")
        sig = np.full_like(x, float(sigma))
        width = np.ones_like(x)
    log_scale = np.real(_log_kernel(p, sig.astype(complex), logx))
    # t = width * sinh(v): resolves the saddle width and the slow exponential tail
    t_max = 60.0 + 40.0 * width + np.abs(logx) * 2.0
    v_max = np.arcsinh(t_max / width)

    def integrate(panels, order=24):
        xg, wg = gauss_legendre(order)
        edges = np.linspace(0.0, 1.0, panels + 1)
        u = (0.5 * (edges[1:] + edges[:-1])[:, None] + 0.5 * np.diff(edges)[:, None] * xg).ravel()
        wu = (0.5 * np.diff(edges)[:, None] * wg).ravel()
        v = u[None, :] * v_max[:, None]
        t = width[:, None] * np.sinh(v)
        jac = width[:, None] * np.cosh(v) * v_max[:, None]
        s = sig[:, None] + 1j * t
        g = np.real(np.exp(_log_kernel(p, s, logx[:, None]) - log_scale[:, None]))
        return (g * jac) @ wu / math.pi

    panels = 4
    prev = integrate(panels)
    err = np.inf
    for _ in range(max_refine):
        panels *= 2
        cur = integrate(panels)
        err = np.abs(cur - prev)
        if np.all(err <= rtol * np.maximum(np.abs(cur), 1e-300)):
            return log_scale, cur, err
        prev = cur
    raise ConvergenceError(
        "Mellin-Barnes contour quadrature did not converge",
        error_estimate=float(np.max(err / np.maximum(np.abs(prev), 1e-300))),
    )


def meijer_g20_12(x, p, sigma=None, rtol=1e-12):
    """G^{2,0}_{1,2}(x | a1; b1, b2) for x > 0 by contour integration.

    (1/2 pi i) int Gamma(b1+s) Gamma(b2+s) / Gamma(a1+s) x^(-s) ds along
    Re s = sigma inside the fundamental strip.
    """
    scalar = np.ndim(x) == 0
    log_scale, val, _ = log_meijer_g20_12(x, p, sigma=sigma, rtol=rtol)
    with np.errstate(under="ignore"):
        out = np.exp(log_scale) * val
    return float(out[0]) if scalar else out


def meijer_g11_12_negative(y, a1, b1, b2):
    """G^{1,1}_{1,2}(-y | a1; b1, b2) for real y >= 0 with integer b1.

    Uses G^{1,1}_{1,2}(w | a; b, c) = Gamma(1-a+b)/Gamma(1+b-c) w^b
    1F1(1-a+b; 1+b-c; -w), which is single-valued at w = -y when b is an
    integer.
    """
    if not float(b1).is_integer():
        raise DomainError("negative argument requires integer b1")
    y = np.asarray(y, dtype=float)
    pref = _sp.gamma(1 - a1 + b1) / _sp.gamma(1 + b1 - b2)
    return pref * (-y) ** b1 * hyp1f1(1 - a1 + b1, 1 + b1 - b2, y)


def mellin_moment(f, s, scale=1.0, rtol=1e-9):
    """int_0^inf x^(s-1) f(x) dx for a vectorized weight ``f``.

    Integrated on [0, scale] and then on doubling intervals until the tail
    is negligible; a tail that does not decay raises
    DivergentIntegralError.
    """
    def integrand(x):
        with np.errstate(under="ignore"):
            return np.where(x > 0, np.power(np.where(x > 0, x, 1.0), s - 1.0) * f(x), 0.0)

    value, _ = integrate_semi_infinite(integrand, scale, rtol=min(rtol, 1e-10))
    if not math.isfinite(float(value)):
        raise DivergentIntegralError(f"Mellin moment at s = {s} is not finite")
    return float(value)
