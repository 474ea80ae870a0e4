"""Gauss-Legendre quadrature helpers shared by the radial integrals.

All integrands are vectorized: ``f(x)`` receives a 1-D array of nodes and
returns an array whose leading axis runs over those nodes.  Trailing axes
are integrated componentwise, which lets one quadrature pass produce a
whole vector of moments or matrix diagonal at once.
"""

from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DivergentIntegralError


@lru_cache(maxsize=None)
def gauss_legendre(order):
    """Nodes and weights on [-1, 1] (cached, read-only)."""
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _panel(f, a, b, order):
    x, w = gauss_legendre(order)
    half = 0.5 * (b - a)
    nodes = 0.5 * (b + a) + half * x
    vals = np.asarray(f(nodes))
    return half * np.tensordot(w, vals, axes=(0, 0))


def fixed_gauss_legendre(f, a, b, panels=1, order=16):
    """Composite rule with ``panels`` equal panels of ``order`` nodes each."""
    edges = np.linspace(a, b, panels + 1)
    x, w = gauss_legendre(order)
    half = 0.5 * np.diff(edges)
    nodes = (0.5 * (edges[1:] + edges[:-1])[:, None] + half[:, None] * x).ravel()
    weights = (half[:, None] * w).ravel()
    vals = np.asarray(f(nodes))
    return np.tensordot(weights, vals, axes=(0, 0))


def adaptive_gauss_legendre(f, a, b, rtol=1e-12, atol=0.0, order=20, max_depth=40):
    """Globally adaptive Gauss-Legendre on [a, b].

    Each panel is estimated with ``order`` and ``order // 2`` nodes; panels
    whose estimates disagree are bisected.  Returns ``(value, error)``.
    """
    low = order // 2
    stack = [(a, b, 0)]
    total = 0.0
    error = 0.0
    # a panel never needs more accuracy than its share of the whole integral
    ref = float(np.max(np.abs(_panel(f, a, b, order)), initial=0.0))
    while stack:
        lo, hi, depth = stack.pop()
        fine = _panel(f, lo, hi, order)
        coarse = _panel(f, lo, hi, low)
        diff = np.max(np.abs(fine - coarse)) if np.size(fine) else 0.0
        scale = np.max(np.abs(fine)) if np.size(fine) else 0.0
        tol = max(rtol * scale, atol, rtol * ref * (hi - lo) / (b - a))
        if diff <= tol or depth >= max_depth:
            if depth >= max_depth and diff > tol:
                raise ConvergenceError(
                    f"panel [{lo:.3g}, {hi:.3g}] did not converge", error_estimate=float(diff)
                )
            total = total + fine
            error += diff
            continue
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return total, error


def integrate_semi_infinite(f, scale, rtol=1e-12, atol=0.0, order=20, max_doublings=90,
                            quiet_intervals=3):
    """Integrate over (0, inf) in geometrically growing intervals.

    The first interval is [0, scale], mapped by x = scale s^4 so that
    algebraic behaviour at the origin stays smooth; then [scale 2^k, scale 2^(k+1)].
    Integration stops once ``quiet_intervals`` consecutive intervals each
    contribute less than ``rtol`` of the running total (componentwise).
    A tail that never quiets down raises DivergentIntegralError.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")

    def head(s):
        # x = scale s^4 turns an x^a endpoint (a > -1) into s^(4a + 3)
        s4 = s ** 4
        vals = np.asarray(f(scale * s4))
        jac = 4.0 * scale * s ** 3
        return vals * jac.reshape((-1,) + (1,) * (vals.ndim - 1))

    total, error = adaptive_gauss_legendre(head, 0.0, 1.0, rtol=rtol, atol=atol, order=order)
    quiet = 0
    lo = scale
    for _ in range(max_doublings):
        hi = 2.0 * lo
        # tail panels only need accuracy relative to what has been accumulated
        floor = max(atol, rtol * 1e-3 * float(np.min(np.abs(total)[np.abs(total) > 0], initial=np.inf))) \
            if np.any(total) else atol
        part, err = adaptive_gauss_legendre(f, lo, hi, rtol=rtol, atol=floor, order=order)
        total = total + part
        error += err
        small = np.all(np.abs(part) <= rtol * 1e-3 * np.abs(total) + atol)
        quiet = quiet + 1 if small else 0
        if quiet >= quiet_intervals:
            return total, error
        lo = hi
    raise DivergentIntegralError(
        f"integrand tail still contributes beyond x = {lo:.3g}", error_estimate=float(error)
    )


def tail_cutoff(log_f, start, drop=36.9, max_steps=200):
    """Smallest X >= start (to bisection accuracy) with log_f(X) < max log_f - drop.

    ``log_f`` is a scalar log-integrand assumed unimodal past ``start``.
    The default drop of 36.9 nats is a 1e-16 relative tail.
    """
    peak = log_f(start)
    x = start
    for _ in range(max_steps):
        x_next = 1.5 * x
        value = log_f(x_next)
        peak = max(peak, value)
        if value < peak - drop:
            lo, hi = x, x_next
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if log_f(mid) < peak - drop:
                    hi = mid
                else:
                    lo = mid
            return hi
        x = x_next
    raise DivergentIntegralError(f"no tail cutoff found below x = {x:.3g}")
