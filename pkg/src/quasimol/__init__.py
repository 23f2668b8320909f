"""Resonantly excited diatomic quasimolecules in the dipole-dipole approximation.

The package computes the first-order molecular states of a ground-state atom
paired with an identical atom in its lowest P-state: coupling constants,
secular spectra, contact-model equilibrium distances, binding energies,
transition dipoles and radiative lifetimes.
"""

from quasimol.constants import CONSTANTS, PhysicalConstants
from quasimol.orbitals import EffectiveCharges, OrbitalSpec
from quasimol.integrals import CouplingCoefficient, helium_coupling
from quasimol.secular import SecularSpectrum, build_block, solve_block
from quasimol.geometry import ContactGeometry, contact_distance
from quasimol.observables import MolecularState, binding_energy
from quasimol.catalog import full_report, get_species, reproduce_table

__all__ = [
    "CONSTANTS",
    "PhysicalConstants",
    "EffectiveCharges",
    "OrbitalSpec",
    "CouplingCoefficient",
    "helium_coupling",
    "SecularSpectrum",
    "build_block",
    "solve_block",
    "ContactGeometry",
    "contact_distance",
    "MolecularState",
    "binding_energy",
    "full_report",
    "get_species",
    "reproduce_table",
]

__version__ = "0.1.0"
