"""Species data and end-to-end reports for He, H and the alkali metals."""

from dataclasses import dataclass, replace
from decimal import ROUND_HALF_UP, Decimal
from math import inf
from pathlib import Path

from quasimol.constants import TABLE_BOHR_RADIUS_ANGSTROM
from quasimol.geometry import contact_distance
from quasimol.integrals import (
    atomic_radius_coupling,
    helium_coupling,
    one_electron_coupling,
    radial_dipole_integral,
)
from quasimol.observables import (
    METASTABLE_LOWER_BOUND_S,
    MolecularState,
    QuasimoleculeReport,
    StateResult,
    binding_energy,
    excitation_energy_helium,
    molecule_size,
    radiative_lifetime,
    transition_dipole_helium,
)
from quasimol.orbitals import EffectiveCharges, OrbitalSpec, helium_orbitals, radial_density_max
from quasimol.secular import bound_state_vector, solve_case

MODELS = ("helium_two_electron", "hydrogen_analytic", "alkali_radius")
CASE_FOR_MODEL = {
    "helium_two_electron": "helium_12",
    "hydrogen_analytic": "one_electron_6",
    "alkali_radius": "one_electron_6",
}
TERMS = ("pi_u", "sigma_g")
KIND_FOR_TERM = {"pi_u": "perpendicular", "sigma_g": "axial"}


class UnknownSpeciesError(KeyError):
    def __init__(self, name, available):
        self.name = name
        self.available = list(available)
        super().__init__(f"unknown species {name!r}; catalog has: {', '.join(self.available)}")

    def __str__(self):
        return self.args[0]


class CatalogError(ValueError):
    """Malformed user catalog file."""


@dataclass(frozen=True)
class SpeciesRecord:
    name: str
    model: str
    n: int
    ground_surface_radius: float  # Bohr
    lobe_amplitude: float  # Bohr
    charges: EffectiveCharges | None = None
    zeta: float | None = None  # hydrogen_analytic nuclear charge
    atomic_radius: float | None = None  # Angstrom
    closed_shell_electrons: int | None = None  # metadata only

    @property
    def case(self):
        return CASE_FOR_MODEL[self.model]

    @property
    def p_principal(self):
        """Principal quantum number of the excited p orbital."""
        return max(self.n, 2)


def helium_record(name="He", charges=EffectiveCharges()):
    ground, _, p = helium_orbitals(charges)
    return SpeciesRecord(name, "helium_two_electron", 1,
                         radial_density_max(ground), radial_density_max(p), charges=charges)


def hydrogen_record(name="H", n=1, zeta=1.0):
    s = OrbitalSpec.hydrogenic(n, 0, zeta)
    p = OrbitalSpec.hydrogenic(max(n, 2), 1, zeta)
    return SpeciesRecord(name, "hydrogen_analytic", n,
                         radial_density_max(s), radial_density_max(p), zeta=float(zeta))


def alkali_record(name, n, atomic_radius, closed_shell_electrons=None):
    # both surfaces sit at the atomic radius
    r = atomic_radius / TABLE_BOHR_RADIUS_ANGSTROM
    return SpeciesRecord(name, "alkali_radius", n, r, r, atomic_radius=atomic_radius,
                         closed_shell_electrons=closed_shell_electrons)


def _builtin():
    records = [
        helium_record(),
        hydrogen_record(),
        alkali_record("Li", 2, 1.520, 2),
        alkali_record("Na", 3, 1.858, 10),
        alkali_record("K", 4, 2.272, 18),
        alkali_record("Rb", 5, 2.475, 36),
        alkali_record("Cs", 6, 2.655, 54),
    ]
    return {r.name: r for r in records}


CATALOG = _builtin()
ALKALIS = ("Li", "Na", "K", "Rb", "Cs")


def get_species(name, catalog=None):
    catalog = CATALOG if catalog is None else catalog
    try:
        return catalog[name]
    except KeyError:
        raise UnknownSpeciesError(name, catalog) from None


def parse_catalog(text):
    """Parse ``name model n value...`` lines; ``#`` starts a comment.

    Values: ``alpha beta gamma`` for helium_two_electron, the nuclear charge
    for hydrogen_analytic, the atomic radius in Angstrom for alkali_radius.
    """
    records = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) < 4:
            raise CatalogError(f"line {lineno}: expected 'name model n value...', got {raw!r}")
        name, model, n_str, *values = fields
        try:
            n = int(n_str)
            nums = [float(v) for v in values]
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        try:
            if model == "helium_two_electron":
                if len(nums) != 3:
                    raise CatalogError(f"line {lineno}: helium_two_electron needs alpha beta gamma")
                record = helium_record(name, EffectiveCharges(*nums))
            elif model == "hydrogen_analytic":
                if len(nums) != 1:
                    raise CatalogError(f"line {lineno}: hydrogen_analytic needs one charge value")
                record = hydrogen_record(name, n, nums[0])
            elif model == "alkali_radius":
                if len(nums) != 1 or nums[0] <= 0:
                    raise CatalogError(f"line {lineno}: alkali_radius needs one positive radius")
                record = alkali_record(name, n, nums[0])
            else:
                raise CatalogError(f"line {lineno}: unknown model {model!r}; expected one of {MODELS}")
        except CatalogError:
            raise
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        records[name] = record
    return records


def load_catalog(path=None):
    """Built-in catalog, overridden and extended by the records in ``path``."""
    catalog = dict(CATALOG)
    if path is not None:
        catalog.update(parse_catalog(Path(path).read_text()))
    return catalog


def species_coupling(record):
    if record.model == "helium_two_electron":
        return helium_coupling(record.charges)
    if record.model == "hydrogen_analytic":
        s = OrbitalSpec.hydrogenic(record.n, 0, record.zeta)
        p = OrbitalSpec.hydrogenic(record.p_principal, 1, record.zeta)
        return one_electron_coupling(abs(radial_dipole_integral(s, p)))
    return atomic_radius_coupling()


def species_state(record, term, coupling=None):
    geometry = contact_distance(record.ground_surface_radius, record.lobe_amplitude, KIND_FOR_TERM[term])
    return MolecularState(term, record.case, coupling or species_coupling(record), geometry)


def assumptions_for(record):
    notes = []
    if record.model == "alkali_radius":
        notes += [
            "sphere radius and lobe amplitude both set to the atomic radius (reconstructed convention)",
            f"atomic radius converted to Bohr with a = {TABLE_BOHR_RADIUS_ANGSTROM} Angstrom",
            "coupling estimated as A = e^2 a^2 / R^3",
            "principal quantum number n is metadata only",
        ]
    if record.model == "helium_two_electron":
        notes += [
            "excited-atom electrons combined symmetrically (the +/- sign does not enter any result)",
        ]
    return notes


def full_report(record, photon_energy_ev=None):
    """Coupling, contact geometry and observables for both bound terms."""
    coupling = species_coupling(record)
    states = {}
    excitation = None
    notes = assumptions_for(record)
    if record.model == "helium_two_electron":
        excitation = excitation_energy_helium()
        photon = excitation if photon_energy_ev is None else photon_energy_ev
        spectra = solve_case("helium_12")
        notes.append(f"sigma_g decay photon energy {photon:.4f} eV (well depth not subtracted)")
    for term in TERMS:
        try:
            state = species_state(record, term, coupling)
        except Exception as exc:
            raise RuntimeError(f"{record.name} {term}: {exc}") from exc
        if record.model == "helium_two_electron":
            axis = "z" if term == "sigma_g" else "x"
            d = float(transition_dipole_helium(bound_state_vector(spectra[axis]),
                                               record.charges, axis=axis)[2 if axis == "z" else 0])
            tau = radiative_lifetime(photon, d)
            note = ""
        elif term == "pi_u":
            d, tau, note = 0.0, inf, "dipole transition forbidden by exchange symmetry"
        else:
            d, tau, note = None, None, "no transition-dipole model for this species"
        metastable = term == "pi_u"
        if metastable:
            note = note or "dipole-forbidden"
            note += f"; metastable, lifetime >= {METASTABLE_LOWER_BOUND_S:g} s"
        states[term] = StateResult(term, state.geometry.R0, state.geometry.theta_contact,
                                   binding_energy(state), d, tau, metastable, note)
    R_M, ratio = molecule_size(states["sigma_g"].R0_bohr, record.atomic_radius)
    return QuasimoleculeReport(record.name, record.model, coupling, states, R_M, ratio,
                               excitation, notes)


@dataclass(frozen=True)
class TableRow:
    atom: str
    n: int
    r_at: float | None
    R_xy: float
    E_xy: float
    R_z: float
    E_z: float

    def rounded(self, digits=2):
        q = Decimal(1).scaleb(-digits)
        rnd = lambda x: float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))
        return replace(self, R_xy=rnd(self.R_xy), E_xy=rnd(self.E_xy),
                       R_z=rnd(self.R_z), E_z=rnd(self.E_z))


def table_row(record):
    rep = full_report(record)
    pi, sg = rep.states["pi_u"], rep.states["sigma_g"]
    return TableRow(record.name, record.n, record.atomic_radius,
                    pi.R0_bohr, pi.binding_energy_ev, sg.R0_bohr, sg.binding_energy_ev)


def reproduce_table(rounded=True, names=ALKALIS, catalog=None):
    """Alkali rows (Atom, n, r_at, R_xy, E_xy, R_z, E_z), rounded half away from zero."""
    rows = [table_row(get_species(name, catalog)) for name in names]
    return [r.rounded() for r in rows] if rounded else rows
