"""Physical outputs: potential curves, binding energies, transition dipoles, lifetimes."""

from dataclasses import dataclass, field
from math import inf

import numpy as np

from quasimol.constants import CONSTANTS, length_bohr_to_angstrom
from quasimol.integrals import (
    CouplingCoefficient,
    dipole_s_p,
    dipole_s_p_quad,
    overlap_quad,
    overlap_s_s,
)
from quasimol.geometry import ContactGeometry
from quasimol.orbitals import AXES, EffectiveCharges
from quasimol.secular import (
    basis_labels,
    default_orbitals,
    exchange_partner,
    product_matrix_element,
)

WELL_MULTIPLIERS = {
    ("helium_12", "pi_u"): 2,
    ("helium_12", "sigma_g"): 4,
    ("one_electron_6", "pi_u"): 1,
    ("one_electron_6", "sigma_g"): 2,
}

# Experimental helium levels relative to He++ (eV)
HELIUM_LEVELS_EV = {"1s2": -79.005, "1s2p": -57.787}

REFERENCE_SIGMA_G_LIFETIME_S = 0.18e-9
TYPICAL_DIPOLE_LIFETIME_S = 1e-9
METASTABLE_LOWER_BOUND_S = 1e-5


@dataclass(frozen=True)
class MolecularState:
    term: str  # "pi_u" or "sigma_g"
    case: str  # "helium_12" or "one_electron_6"
    coupling: CouplingCoefficient
    geometry: ContactGeometry

    def __post_init__(self):
        if (self.case, self.term) not in WELL_MULTIPLIERS:
            raise ValueError(f"no well multiplier for case={self.case!r}, term={self.term!r}")
        expected = "perpendicular" if self.term == "pi_u" else "axial"
        if self.geometry.kind != expected:
            raise ValueError(f"{self.term} needs {expected} contact geometry")

    @property
    def well_multiplier(self) -> int:
        return WELL_MULTIPLIERS[self.case, self.term]


def potential_energy(state, R):
    """Attractive branch -m c e**2 a**2 / R**3 in eV, with ``R`` in Bohr."""
    if not R > 0:
        raise ValueError("R must be positive")
    return -state.well_multiplier * state.coupling.value * CONSTANTS.hartree_ev / R**3


def potential_curve(state, R_samples):
    """``[(R, U_eV), ...]``; the hard wall gives ``U = inf`` for ``R < R0``."""
    out = []
    for R in R_samples:
        U = potential_energy(state, R)
        out.append((float(R), inf if R < state.geometry.R0 else U))
    return out


def binding_energy(state):
    """Well depth at the contact distance, in eV (negative)."""
    return potential_energy(state, state.geometry.R0)


def _helium_tables(charges, method):
    """One-electron factors <orbital| . |0̃> needed for transitions to the ground pair."""
    orbs = default_orbitals("helium_12", charges)
    ground = orbs["g"]
    ovl, dip = {}, {}
    for sym, orb in orbs.items():
        if orb.l == 1:
            ovl[sym, "g"] = 0.0
        elif sym == "g":
            ovl[sym, "g"] = 1.0
        elif method == "closed":
            ovl[sym, "g"] = overlap_s_s(orb.zeta, ground.zeta)
        else:
            ovl[sym, "g"] = overlap_quad(orb, ground)
        for c in AXES:
            if orb.l == 0:
                dip[sym, "g", c] = 0.0
            elif method == "closed":
                dip[sym, "g", c] = dipole_s_p(ground, orb, c)
            else:
                dip[sym, "g", c] = dipole_s_p_quad(ground, orb, c)
    return ovl, dip


def transition_dipole_helium(state_vector, charges=EffectiveCharges(), axis=None, method="closed"):
    """<Psi| d_1 + d_2 + d_1' + d_2' |0̃0̃0̃0̃> in units of e*a, as an (x, y, z) array.

    ``state_vector`` holds either the 4 coefficients of one axis block (then
    ``axis`` is required) or all 12 coefficients in :func:`basis_labels`
    order.  Contributions are summed basis function by basis function,
    each exchange pair together.
    ``method="quadrature"`` evaluates every one-electron factor numerically.
    """
    vec = np.asarray(state_vector, dtype=float)
    labels = basis_labels("helium_12")
    if vec.size == 4:
        if axis not in AXES:
            raise ValueError("a 4-component vector needs axis='x', 'y' or 'z'")
        labels = [b for b in labels if b.axis == axis]
    elif vec.size != 12:
        raise ValueError("state vector must have 4 or 12 components")
    if abs(np.dot(vec, vec) - 1.0) > 1e-10:
        raise ValueError("state vector must be normalized")
    ovl, dip = _helium_tables(charges, method)
    ground = ("g", "g", "g", "g")

    def contribution(label):
        out = np.zeros(3)
        for k, comp in enumerate(AXES):
            for e in range(4):
                out[k] -= product_matrix_element(label.orbitals, ground, {e: comp}, ovl, dip)
        return out

    coeffs = dict(zip(labels, vec))
    d = np.zeros(3)
    # partners under atom exchange carry identical one-electron factors; summing
    # each pair first makes the antisymmetric cancellation exact
    for label in labels:
        if label.site == "B":
            partner = exchange_partner(label)
            d += coeffs[label] * contribution(label) + coeffs[partner] * contribution(partner)
    return d


def helium_sigma_g_dipole_closed(charges=EffectiveCharges()):
    """-2**9 alpha**3 beta**1.5 gamma**2.5 / ((alpha+beta)**3 (alpha+gamma)**5), in e*a."""
    a, b, g = charges.alpha, charges.beta, charges.gamma
    return -(2.0**9) * a**3 * b**1.5 * g**2.5 / ((a + b) ** 3 * (a + g) ** 5)


def radiative_rate(photon_energy_ev, dipole_ea):
    """Spontaneous dipole emission rate 4 omega**3 |d|**2 / (3 hbar c**3), in 1/s."""
    if not photon_energy_ev > 0:
        raise ValueError("photon energy must be positive")
    d2 = float(np.sum(np.square(dipole_ea)))
    omega = photon_energy_ev / CONSTANTS.hartree_ev
    rate_au = 4.0 * omega**3 * d2 / (3.0 * CONSTANTS.fine_structure_inv**3)
    return rate_au / CONSTANTS.atomic_time_s


def radiative_lifetime(photon_energy_ev, dipole_ea):
    """1/w in seconds; ``inf`` for a dipole-forbidden transition."""
    w = radiative_rate(photon_energy_ev, dipole_ea)
    return inf if w == 0.0 else 1.0 / w


@dataclass(frozen=True)
class MultipoleEstimate:
    ka0: float
    suppression: float
    lifetime_estimate_s: float


def multipole_suppression(photon_energy_ev, system_size_angstrom,
                          dipole_lifetime_s=TYPICAL_DIPOLE_LIFETIME_S):
    """Order-of-magnitude lifetime when the dipole channel is closed.

    Each step up in multipole order costs a factor (k a0)**2 in rate.
    """
    if not (photon_energy_ev > 0 and system_size_angstrom > 0):
        raise ValueError("photon energy and system size must be positive")
    k = photon_energy_ev / CONSTANTS.hbar_c_ev_angstrom
    ka0 = k * system_size_angstrom
    return MultipoleEstimate(ka0, ka0**2, dipole_lifetime_s / ka0**2)


def excitation_energy_helium():
    """E(1s2p) - E(1s**2) from the stored experimental levels, in eV."""
    return HELIUM_LEVELS_EV["1s2p"] - HELIUM_LEVELS_EV["1s2"]


def molecule_size(R_z, atomic_radius_angstrom=None):
    """(R_M in Angstrom, cross-section ratio or None) with R_M = 2 R_z."""
    if not R_z > 0:
        raise ValueError("R_z must be positive")
    R_M = length_bohr_to_angstrom(2.0 * R_z)
    ratio = None
    if atomic_radius_angstrom:
        ratio = (R_M / (2.0 * atomic_radius_angstrom)) ** 2
    return R_M, ratio


@dataclass
class StateResult:
    term: str
    R0_bohr: float
    theta_deg: float
    binding_energy_ev: float
    transition_dipole_ea: float | None  # signed axial component; None when not modeled
    lifetime_s: float | None  # None when not modeled, inf when dipole-forbidden
    metastable: bool
    note: str = ""


@dataclass
class QuasimoleculeReport:
    species: str
    model: str
    coupling: CouplingCoefficient
    states: dict
    molecule_size_angstrom: float
    cross_section_ratio: float | None
    excitation_energy_ev: float | None
    assumptions: list = field(default_factory=list)
