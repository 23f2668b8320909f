"""Equilibrium distance from rigid probability-density surfaces in contact.

The ground-state atom A is a sphere of radius ``s`` (its most probable
radius).  The excited atom B, a distance ``R`` away on the z axis, is the
surface ``r(theta) = L sin**2(theta)`` for x/y states or ``L cos**2(theta)``
for z states, with ``L`` the most probable radius of the p electron.  The
equilibrium distance is the largest ``R`` at which the two surfaces touch.
Both surfaces are symmetric about the axis, so the problem lives in one
meridian plane.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import degrees, pi

import numpy as np

from quasimol._numerics import ConvergenceError, bisect_root, bracketed_golden_min

KINDS = ("perpendicular", "axial")


@dataclass(frozen=True)
class ContactGeometry:
    R0: float  # Bohr
    theta_contact: float  # degrees, from the internuclear axis
    kind: str
    sphere_radius: float
    lobe_amplitude: float


def lobe_radius(kind, L, theta):
    if not L > 0:
        raise ValueError("lobe amplitude must be positive")
    if kind == "perpendicular":
        return L * np.sin(theta) ** 2
    if kind == "axial":
        return L * np.cos(theta) ** 2
    raise ValueError(f"kind must be one of {KINDS}")


def lobe_point(R, L, kind, theta):
    """Meridian-plane coordinates (z, rho) of the lobe point, lobe facing atom A at the origin."""
    r = lobe_radius(kind, L, theta)
    return R - r * np.cos(theta), r * np.sin(theta)


def sphere_to_lobe(R, L, kind, theta):
    """Distance from nucleus A to the lobe point at polar angle ``theta``."""
    z, rho = lobe_point(R, L, kind, theta)
    return np.hypot(z, rho)


def closest_approach(R, L, kind, tol=1e-10):
    """(min distance from A to the lobe, angle in radians) at separation ``R``."""
    theta, d = bracketed_golden_min(
        lambda t: sphere_to_lobe(R, L, kind, t), 0.0, pi / 2, n_scan=180, tol=tol, vectorized=True
    )
    return float(d), float(theta)


@lru_cache(maxsize=256)  # pure in its arguments; the catalog asks for the same pairs repeatedly
def contact_distance(s, L, kind, r_tol=1e-12, theta_tol=1e-10):
    """Equilibrium internuclear distance where the sphere just touches the lobe.

    The separation is bracketed in ``[s, s + 2L]``.  Approaching from large
    ``R``, the first separation at which the closest lobe point reaches the
    sphere is the contact; it is isolated by a descending scan and refined by
    bisection.  Inner angular minimization is golden-section.
    """
    if not (s > 0 and L > 0):
        raise ValueError("sphere radius and lobe amplitude must be positive")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")

    def gap(R):
        return closest_approach(R, L, kind, theta_tol)[0] - s

    lo, hi = s, s + 2.0 * L
    if gap(hi) <= 0:
        raise ConvergenceError(f"surfaces still overlap at R = {hi}")
    grid = np.linspace(hi, lo, 201)
    upper = hi
    for R in grid[1:]:
        if gap(R) <= 0:
            lo = R
            break
        upper = R
    else:
        raise ConvergenceError(f"no contact in [{s}, {s + 2 * L}]")
    R0 = bisect_root(gap, lo, upper, tol=r_tol)
    _, theta = closest_approach(R0, L, kind, theta_tol)
    return ContactGeometry(float(R0), degrees(theta), kind, float(s), float(L))


def grid_scan_contact(s, L, kind, n_R=10_000, n_theta=10_000, chunk=250):
    """Brute-force contact: largest grid R whose grid-minimum distance is <= s.

    Independent of :func:`contact_distance`: no search, just exhaustive
    evaluation on an ``n_R x n_theta`` grid over ``[s, s+2L] x [0, 90 deg]``.
    Returns ``(R0, theta_deg, dR)``.
    """
    Rs = np.linspace(s, s + 2 * L, n_R)
    thetas = np.linspace(0.0, pi / 2, n_theta)
    r = lobe_radius(kind, L, thetas)
    dz, rho = r * np.cos(thetas), r * np.sin(thetas)
    best_R, best_theta = None, None
    # walk from the outside in; stop at the first chunk containing contact
    for end in range(n_R, 0, -chunk):
        block = Rs[max(end - chunk, 0):end]
        d = np.hypot(block[:, None] - dz[None, :], rho[None, :])
        dmin = d.min(axis=1)
        hit = np.nonzero(dmin <= s)[0]
        if hit.size:
            k = hit[-1]
            best_R = block[k]
            best_theta = thetas[np.argmin(d[k])]
            break
    if best_R is None:
        raise ConvergenceError("grid scan found no contact")
    return float(best_R), float(np.degrees(best_theta)), float(Rs[1] - Rs[0])
