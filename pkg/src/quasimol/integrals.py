"""One-electron integrals over Slater/hydrogenic orbitals and coupling coefficients.

Closed forms (sums of exponential moments) are the production path.  The
``*_quad`` functions evaluate the same integrals by adaptive quadrature and
exist to cross-check them.  Every quantity is dimensionless or in Bohr radii;
factors of e**2 are applied in :mod:`quasimol.observables`.
"""

from dataclasses import dataclass
from math import factorial, pi, sqrt

import numpy as np
from scipy import integrate

from quasimol._numerics import integrate_semi_infinite
from quasimol.orbitals import (
    EffectiveCharges,
    OrbitalSpec,
    angular_value,
    helium_orbitals,
    radial_function,
    radial_polynomial,
)

PROVENANCES = ("helium_closed_form", "radial_integral", "atomic_radius_estimate")

# <p_axis| n_axis |s> over the unit sphere
S_P_ANGULAR = 1.0 / sqrt(3.0)


@dataclass(frozen=True)
class CouplingCoefficient:
    """Dimensionless ``c`` in ``A = c * e**2 a**2 / R**3``."""

    value: float
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.value < 0:
            raise ValueError("coupling coefficient must be non-negative")

    def energy_au(self, R):
        """A at internuclear distance ``R`` (Bohr), in Hartree."""
        return self.value / R**3


def _as_orbital(s):
    return s if isinstance(s, OrbitalSpec) else OrbitalSpec.slater_1s(s)


def radial_moment(a, b, power):
    """Closed form of the integral of R_a(r) R_b(r) r**power over [0, inf)."""
    ca, la = radial_polynomial(a)
    cb, lb = radial_polynomial(b)
    lam = la + lb
    total = 0.0
    for i, ci in enumerate(ca):
        for j, cj in enumerate(cb):
            if ci and cj:
                m = i + j + power
                total += ci * cj * factorial(m) / lam ** (m + 1)
    return float(total)


def overlap_s_s(zeta1, zeta2):
    """<1s(zeta1)|1s(zeta2)> = 8 (zeta1 zeta2)**1.5 / (zeta1 + zeta2)**3."""
    if zeta1 <= 0 or zeta2 <= 0:
        raise ValueError("effective charges must be positive")
    return 8.0 * (zeta1 * zeta2) ** 1.5 / (zeta1 + zeta2) ** 3


def overlap(a, b):
    """<a|b> for any pair of supported orbitals."""
    if a.angular != b.angular:
        return 0.0
    return radial_moment(a, b, 2)


def dipole_s_p(s_orbital, p_spec, axis=None):
    """<p| r_axis |s> in Bohr radii (electron charge factored out).

    ``s_orbital`` is an s-type :class:`OrbitalSpec` or a Slater 1s charge.
    ``axis`` defaults to the p orbital's own axis; mismatched axes vanish.
    The sign follows the hydrogenic Laguerre convention (positive for 2p).
    """
    s = _as_orbital(s_orbital)
    if p_spec.l != 1:
        raise ValueError("dipole_s_p needs an l=1 orbital")
    if s.l != 0:
        raise ValueError("dipole_s_p needs an s orbital on the other side")
    axis = axis or p_spec.axis
    if axis != p_spec.axis:
        return 0.0
    return S_P_ANGULAR * radial_moment(s, p_spec, 3)


def radial_dipole_integral(bra, ket, method="closed"):
    """Integral of r**3 R_n0(r) R_n'1(r) over [0, inf), in Bohr radii."""
    if bra.l != 0 or ket.l != 1:
        raise ValueError("radial_dipole_integral needs an l=0 bra and an l=1 ket")
    if method == "closed":
        return radial_moment(bra, ket, 3)
    if method == "quadrature":
        return integrate_semi_infinite(
            lambda r: r**3 * radial_function(bra, r) * radial_function(ket, r)
        )
    raise ValueError(f"unknown method {method!r}")


def helium_coupling(charges=EffectiveCharges()):
    """2**16 alpha**6 beta**3 gamma**5 / ((alpha+beta)**6 (alpha+gamma)**10)."""
    a, b, g = charges.alpha, charges.beta, charges.gamma
    value = 2.0**16 * a**6 * b**3 * g**5 / ((a + b) ** 6 * (a + g) ** 10)
    return CouplingCoefficient(value, "helium_closed_form")


def helium_coupling_from_integrals(charges=EffectiveCharges(), method="closed"):
    """Assemble <0|0~>**2 <x|x|0~>**2 from the individual integrals."""
    ground, inner, p = helium_orbitals(charges)
    px = p.with_angular("px")
    if method == "closed":
        s = overlap_s_s(charges.alpha, charges.beta)
        d = dipole_s_p(ground, px)
    else:
        s = overlap_quad(ground, inner)
        d = dipole_s_p_quad(ground, px, "x")
    return CouplingCoefficient(s**2 * d**2, "helium_closed_form")


def one_electron_coupling(radial_integral):
    """A / (e**2 a**2 / R**3) = (integral / a)**2 / 3."""
    if radial_integral < 0:
        raise ValueError("radial integral magnitude must be non-negative")
    return CouplingCoefficient(radial_integral**2 / 3.0, "radial_integral")


def atomic_radius_coupling():
    """Coarse estimate A ~ e**2 a**2 / R**3 for atoms without known radial functions."""
    return CouplingCoefficient(1.0, "atomic_radius_estimate")


def hydrogen_radial_dipole_exact():
    """128 sqrt(6) / 243: the hydrogen 1s-2p radial dipole integral."""
    return 128.0 * sqrt(6.0) / 243.0


# -- quadrature oracles -------------------------------------------------------


def overlap_quad(a, b):
    radial = integrate_semi_infinite(lambda r: r**2 * radial_function(a, r) * radial_function(b, r))
    return radial * angular_overlap_quad(a.angular, b.angular)


def angular_overlap_quad(ang_a, ang_b, axis=None):
    """Integral over the sphere of Y_a Y_b (times n_axis when ``axis`` is given)."""
    comps = {"x": lambda t, p: np.sin(t) * np.cos(p),
             "y": lambda t, p: np.sin(t) * np.sin(p),
             "z": lambda t, p: np.cos(t)}
    weight = comps[axis] if axis else (lambda t, p: 1.0)

    def integrand(theta, phi):
        return angular_value(ang_a, theta, phi) * angular_value(ang_b, theta, phi) \
            * weight(theta, phi) * np.sin(theta)

    value, _ = integrate.dblquad(integrand, 0.0, 2 * pi, 0.0, pi, epsabs=1e-13, epsrel=1e-12)
    return value


def dipole_s_p_quad(s_orbital, p_spec, axis):
    """<p| r_axis |s> by separate radial and angular quadrature."""
    s = _as_orbital(s_orbital)
    radial = integrate_semi_infinite(
        lambda r: r**3 * radial_function(s, r) * radial_function(p_spec, r)
    )
    return radial * angular_overlap_quad(p_spec.angular, s.angular, axis)
