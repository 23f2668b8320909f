"""Scalar search and quadrature helpers shared by the orbital and geometry code."""

import math

import numpy as np
from scipy import integrate

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class ConvergenceError(RuntimeError):
    """A root search or quadrature did not reach its tolerance."""


def golden_section_min(f, a, b, tol=1e-10):
    """Minimize a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))``.  The endpoints are compared against the interior
    estimate so that a minimum sitting on the boundary is returned exactly.
    """
    lo, hi = min(a, b), max(a, b)
    h = hi - lo
    c = lo + INV_PHI2 * h
    d = lo + INV_PHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            h = hi - lo
            c = lo + INV_PHI2 * h
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            h = hi - lo
            d = lo + INV_PHI * h
            fd = f(d)
    best = min((fc, c), (fd, d), (f(a), a), (f(b), b))
    return best[1], best[0]


def bracketed_golden_min(f, a, b, n_scan=200, tol=1e-10, vectorized=False):
    """Global-ish minimum: coarse scan to isolate a bracket, then golden section.

    With ``vectorized=True`` the scan calls ``f`` once on the whole grid.
    """
    xs = np.linspace(a, b, n_scan + 1)
    ys = np.asarray(f(xs)) if vectorized else np.array([f(x) for x in xs])
    i = int(np.argmin(ys))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, n_scan)]
    x, fx = golden_section_min(f, lo, hi, tol)
    fx = float(fx)
    if ys[i] < fx:
        return float(xs[i]), float(ys[i])
    return x, fx


def bisect_root(f, a, b, tol=1e-12, max_iter=200):
    """Root of ``f`` on ``[a, b]`` by bisection; ``f(a)`` and ``f(b)`` must differ in sign."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise ConvergenceError(f"no sign change on [{a}, {b}]: f={fa}, {fb}")
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0 or 0.5 * (b - a) < tol:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    raise ConvergenceError(f"bisection did not converge within {max_iter} steps")


def integrate_semi_infinite(f, epsabs=1e-12, epsrel=1e-12, limit=200):
    """Adaptive Gauss-Kronrod quadrature of ``f`` over ``[0, inf)``.

    Raises :class:`ConvergenceError` carrying the achieved error estimate when
    QUADPACK reports a problem or the estimate exceeds the requested accuracy.
    """
    value, err, info = _quad(f, 0.0, np.inf, epsabs, epsrel, limit)
    if err > max(epsabs, epsrel * abs(value)) * 10:
        raise ConvergenceError(f"quadrature error estimate {err:.3e} for value {value:.12g}")
    return value


def integrate_interval(f, a, b, epsabs=1e-13, epsrel=1e-12, limit=200):
    value, err, _ = _quad(f, a, b, epsabs, epsrel, limit)
    if err > max(epsabs, epsrel * abs(value)) * 10:
        raise ConvergenceError(f"quadrature error estimate {err:.3e} for value {value:.12g}")
    return value


def _quad(f, a, b, epsabs, epsrel, limit):
    out = integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3:
        raise ConvergenceError(f"quadrature failed ({out[3]!r}); error estimate {err:.3e}")
    return value, err, out[2]
