"""Physical constants and unit conversions.

Internal computation is in Hartree atomic units (Gaussian convention, so
e**2/a is the Hartree).  Reported quantities are in eV, Angstrom, Bohr radii
and seconds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    bohr_radius_angstrom: float = 0.529177
    hartree_ev: float = 27.2114
    # speed of light in atomic units, 1/alpha
    fine_structure_inv: float = 137.036
    atomic_time_s: float = 2.41888e-17

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise ValueError(f"constant {name} must be positive, got {value}")

    @property
    def e2_ev_angstrom(self) -> float:
        """e**2 in eV*Angstrom (Hartree times Bohr radius)."""
        return self.hartree_ev * self.bohr_radius_angstrom

    @property
    def hbar_c_ev_angstrom(self) -> float:
        return self.hartree_ev * self.bohr_radius_angstrom * self.fine_structure_inv


CONSTANTS = PhysicalConstants()

# Bohr radius to three digits.  The printed alkali table converts atomic radii
# with this rounded value; the catalog uses it only for that conversion.
TABLE_BOHR_RADIUS_ANGSTROM = 0.529


def energy_au_to_ev(energy):
    return energy * CONSTANTS.hartree_ev


def energy_ev_to_au(energy):
    return energy / CONSTANTS.hartree_ev


def length_bohr_to_angstrom(length):
    return length * CONSTANTS.bohr_radius_angstrom


def length_angstrom_to_bohr(length):
    return length / CONSTANTS.bohr_radius_angstrom


def time_au_to_s(t):
    return t * CONSTANTS.atomic_time_s
