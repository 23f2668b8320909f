"""One-electron hydrogen-like orbitals.

Lengths are in Bohr radii.  Two radial families are supported: a Slater 1s
function ``exp(-zeta r)`` with a variational effective charge, and the
hydrogenic ``R_nl`` for a nucleus of charge ``zeta`` (so the exponent is
``zeta / n``).  Angular factors are real Cartesian harmonics.
"""

from dataclasses import dataclass
from math import comb, factorial, pi, sqrt

import numpy as np
from scipy.special import eval_genlaguerre

from quasimol._numerics import ConvergenceError, bisect_root, bracketed_golden_min

P_NORM = sqrt(3.0 / (4.0 * pi))
S_NORM = 1.0 / sqrt(4.0 * pi)

ANGULAR = ("s", "px", "py", "pz")
AXES = ("x", "y", "z")


@dataclass(frozen=True)
class EffectiveCharges:
    """Screening parameters of the helium orbitals.

    ``alpha``: ground-state variational charge (both electrons).
    ``beta``: charge seen by the inner 1s electron of the excited atom.
    ``gamma``: exponent of the 2p electron in the singly charged residue.
    """

    alpha: float = 27.0 / 16.0
    beta: float = 2.0
    gamma: float = 0.5

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) <= 0:
            raise ValueError(f"effective charges must be positive: {self}")


@dataclass(frozen=True)
class OrbitalSpec:
    kind: str
    zeta: float
    n: int = 1
    l: int = 0
    angular: str = "s"

    def __post_init__(self):
        if self.kind not in ("slater_1s", "hydrogenic"):
            raise ValueError(f"unknown orbital kind {self.kind!r}")
        if self.zeta <= 0:
            raise ValueError("zeta must be positive")
        if self.kind == "slater_1s" and (self.n, self.l) != (1, 0):
            raise ValueError("slater_1s orbitals have n=1, l=0")
        if self.n < 1 or not 0 <= self.l < self.n:
            raise ValueError(f"invalid quantum numbers n={self.n}, l={self.l}")
        if self.l > 1:
            raise ValueError("only s and p orbitals are supported")
        if self.angular not in ANGULAR:
            raise ValueError(f"angular must be one of {ANGULAR}")
        if (self.l == 0) != (self.angular == "s"):
            raise ValueError(f"angular factor {self.angular!r} incompatible with l={self.l}")

    @classmethod
    def slater_1s(cls, zeta):
        return cls("slater_1s", float(zeta))

    @classmethod
    def hydrogenic(cls, n, l, zeta, angular=None):
        if angular is None:
            angular = "s" if l == 0 else "pz"
        return cls("hydrogenic", float(zeta), int(n), int(l), angular)

    def with_angular(self, angular):
        return OrbitalSpec(self.kind, self.zeta, self.n, self.l, angular)

    @property
    def exponent(self) -> float:
        """Decay constant of the radial exponential, in 1/a."""
        return self.zeta if self.kind == "slater_1s" else self.zeta / self.n

    @property
    def axis(self):
        return None if self.angular == "s" else self.angular[1]


def helium_orbitals(charges=EffectiveCharges()):
    """(ground 1s, inner 1s of the excited atom, 2p) for helium.

    The 2p function ``(2/sqrt3) gamma**(5/2) r exp(-gamma r)`` is the
    hydrogenic R_21 of nuclear charge ``2 * gamma``.
    """
    return (
        OrbitalSpec.slater_1s(charges.alpha),
        OrbitalSpec.slater_1s(charges.beta),
        OrbitalSpec.hydrogenic(2, 1, 2.0 * charges.gamma),
    )


def radial_polynomial(spec):
    """Return ``(coeffs, lam)`` with ``R(r) = sum_k coeffs[k] r**k exp(-lam r)``."""
    if spec.kind == "slater_1s":
        return np.array([2.0 * spec.zeta**1.5]), spec.zeta
    n, l, z = spec.n, spec.l, spec.zeta
    k = n - l - 1
    alpha = 2 * l + 1
    scale = 2.0 * z / n
    norm = sqrt(scale**3 * factorial(k) / (2 * n * factorial(n + l)))
    coeffs = np.zeros(n)
    for i in range(k + 1):
        coeffs[l + i] = norm * (-1) ** i * comb(k + alpha, k - i) / factorial(i) * scale ** (l + i)
    return coeffs, z / n


def radial_function(spec, r):
    """Radial part R(r), normalized so that the integral of R**2 r**2 is one."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    if spec.kind == "slater_1s":
        return 2.0 * spec.zeta**1.5 * np.exp(-spec.zeta * r)
    n, l, z = spec.n, spec.l, spec.zeta
    rho = 2.0 * z * r / n
    norm = sqrt((2.0 * z / n) ** 3 * factorial(n - l - 1) / (2 * n * factorial(n + l)))
    return norm * np.exp(-rho / 2) * rho**l * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)


def radial_value(spec, r):
    """Amplitude at radius ``r`` (in a**-3/2).

    Hydrogenic specs give R_nl(r).  Slater 1s specs give the full orbital
    ``zeta**1.5 / sqrt(pi) * exp(-zeta r)``, angular factor included.
    """
    if spec.kind == "slater_1s":
        return radial_function(spec, r) * S_NORM
    return radial_function(spec, r)


def p_angular_value(axis, theta, phi):
    """Real p harmonic: sqrt(3/4pi) times the unit-vector component along ``axis``."""
    if axis == "x":
        return P_NORM * np.sin(theta) * np.cos(phi)
    if axis == "y":
        return P_NORM * np.sin(theta) * np.sin(phi)
    if axis == "z":
        return P_NORM * np.cos(theta) * np.ones_like(phi)
    raise ValueError(f"axis must be x, y or z, got {axis!r}")


def angular_value(angular, theta, phi):
    if angular == "s":
        return S_NORM * np.ones_like(np.asarray(theta + phi, dtype=float))
    return p_angular_value(angular[1], theta, phi)


def wavefunction(spec, r, theta, phi):
    return radial_function(spec, r) * angular_value(spec.angular, theta, phi)


def _radial_amplitude_slope(spec, r):
    """d/dr of r R(r); its sign change marks a density extremum."""
    coeffs, lam = radial_polynomial(spec)
    k = np.arange(len(coeffs))
    return float(np.sum(coeffs * ((k + 1) * r**k - lam * r ** (k + 1))) * np.exp(-lam * r))


def radial_density_max(spec, tol=1e-10):
    """Most probable radius: argmax of r**2 R(r)**2, in Bohr radii.

    Golden-section search over [0, 50/exponent] picks the global maximum; the
    slope of r R(r) is then bisected to sharpen the root beyond what a
    comparison-only search can resolve on a flat peak.
    """
    r_hi = 50.0 / spec.exponent
    n_scan = 2000

    def neg_density(r):
        return -(r * radial_function(spec, r)) ** 2

    r_max, _ = bracketed_golden_min(neg_density, 0.0, r_hi, n_scan=n_scan, tol=tol)
    if r_max <= 0.0 or r_max >= r_hi:
        raise ConvergenceError(f"radial density of {spec} has no interior maximum")
    step = r_hi / n_scan
    lo, hi = max(r_max - step, 0.0), min(r_max + step, r_hi)
    slope = lambda r: _radial_amplitude_slope(spec, r)
    if slope(lo) * slope(hi) < 0:
        # r R(r) may be negative on this lobe; the density peak is where the slope vanishes
        r_max = bisect_root(slope, lo, hi, tol=1e-14)
    return float(r_max)
