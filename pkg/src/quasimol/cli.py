"""Command-line interface: ``quasimol {levels,curve,table,lifetime,geometry,report}``.

Every command writes one document to stdout, either a JSON object::

    {"schema_version": "1", "command": ..., "inputs": {...},
     "results": {"rows": [...], ...}, "assumptions": [...]}

or CSV (unit-annotated header, comma separated, LF line endings) holding the
same rows.  Numbers are rounded to 6 significant digits and written in fixed
notation in CSV, so repeated runs are byte-identical.

User catalog files (``--catalog``) hold one record per line,
``name model n value...``, whitespace separated, ``#`` comments::

    He2  helium_two_electron  1  1.6875 2 0.5   # alpha beta gamma
    D    hydrogen_analytic    1  1.0            # nuclear charge
    Fr   alkali_radius        7  2.8            # atomic radius, Angstrom

Exit codes: 0 success, 2 usage error, 3 computation failure.
"""

import argparse
import csv
import io
import json
import math
import sys
import re
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from quasimol import __version__
from quasimol._numerics import ConvergenceError
from quasimol.catalog import (
    KIND_FOR_TERM,
    TERMS,
    CatalogError,
    UnknownSpeciesError,
    assumptions_for,
    full_report,
    get_species,
    load_catalog,
    species_coupling,
    species_state,
    table_row,
)
from quasimol.constants import CONSTANTS, length_bohr_to_angstrom
from quasimol.observables import (
    METASTABLE_LOWER_BOUND_S,
    REFERENCE_SIGMA_G_LIFETIME_S,
    excitation_energy_helium,
    multipole_suppression,
    potential_curve,
    radiative_rate,
)
from quasimol.orbitals import AXES
from quasimol.secular import default_orbitals, interaction_matrix, solve_block, solve_case

SCHEMA_VERSION = "1"
EXIT_USAGE = 2
EXIT_FAILURE = 3
SIG_DIGITS = 6


class UsageError(Exception):
    pass


def fixed(x, sig=SIG_DIGITS):
    """Fixed-notation string with ``sig`` significant digits; None for missing/infinite."""
    if x is None or isinstance(x, bool):
        return x
    x = float(x)
    if not math.isfinite(x):
        return None
    if x == 0.0:
        return "0"
    text = format(Decimal(f"{x:.{sig - 1}e}"), "f")
    return "0" if float(text) == 0.0 else text


def decimals(x, digits=2):
    """Table-precision rounding (half away from zero) as a fixed string."""
    if x is None:
        return None
    return format(Decimal(repr(float(x))).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_UP), "f")


NUMBER = re.compile(r"-?\d+(\.\d+)?")


def _json_value(v):
    if isinstance(v, str) and NUMBER.fullmatch(v):
        return float(v) if "." in v else int(v)
    return v


# -- commands -----------------------------------------------------------------


def cmd_levels(args, catalog):
    record = get_species(args.species, catalog)
    coupling = species_coupling(record)
    R_of_term = {}
    if args.at_R is None and args.coupling_ev is None:
        for term in TERMS:
            R_of_term[term] = species_state(record, term, coupling).geometry.R0

    def A_ev(term):
        if args.coupling_ev is not None:
            return args.coupling_ev
        R = args.at_R if args.at_R is not None else R_of_term.get(term)
        return None if R is None else coupling.value * CONSTANTS.hartree_ev / R**3

    rows = []
    for axis, spectrum in solve_case(record.case).items():
        term = "sigma_g" if axis == "z" else "pi_u"
        for value, mult in spectrum.levels():
            unit = A_ev(term)
            rows.append({
                "block": axis,
                "eigenvalue_A": fixed(value),
                "degeneracy": mult,
                "energy_eV": fixed(value * unit) if unit is not None else None,
                "R_bohr": fixed(args.at_R if args.at_R is not None else R_of_term.get(term)),
                "term": spectrum.term_labels.get(round(value, 9), ""),
            })
    orbs = default_orbitals(record.case, record.charges) if record.charges else None
    V, labels = interaction_matrix(record.case, orbs)
    A_full = float(np.max(np.abs(V))) / 2.0  # largest entry is the z coupling, 2A
    full = solve_block(V, A_full, labels)
    for value, mult in full.levels():
        energy = None
        if args.coupling_ev is not None or args.at_R is not None:
            energy = fixed(value * A_ev(None))
        rows.append({
            "block": "all",
            "eigenvalue_A": fixed(value),
            "degeneracy": mult,
            "energy_eV": energy,
            "R_bohr": fixed(args.at_R),
            "term": full.term_labels.get(round(value, 9), ""),
        })
    inputs = {"species": record.name, "at_R_bohr": args.at_R, "coupling_A_eV": args.coupling_ev}
    extra = {"coupling_coefficient": fixed(coupling.value), "coupling_provenance": coupling.provenance,
             "case": record.case}
    return inputs, rows, extra, assumptions_for(record)


def cmd_curve(args, catalog):
    if not args.R_min > 0:
        raise UsageError("R_min must be positive")
    if not args.R_max > args.R_min:
        raise UsageError("R_max must exceed R_min")
    if args.steps < 2:
        raise UsageError("steps must be at least 2")
    if args.term not in TERMS:
        raise UsageError(f"term must be one of {TERMS}")
    record = get_species(args.species, catalog)
    state = species_state(record, args.term)
    Rs = np.linspace(args.R_min, args.R_max, args.steps)
    rows = []
    for R, U in potential_curve(state, Rs):
        wall = not math.isfinite(U)
        rows.append({
            "R_bohr": fixed(R),
            "R_angstrom": fixed(length_bohr_to_angstrom(R)),
            "U_eV": None if wall else fixed(U),
            "hard_wall": wall,
        })
    inputs = {"species": record.name, "term": args.term, "R_min_bohr": args.R_min,
              "R_max_bohr": args.R_max, "steps": args.steps}
    extra = {"R0_bohr": fixed(state.geometry.R0), "well_multiplier": state.well_multiplier,
             "coupling_coefficient": fixed(state.coupling.value)}
    return inputs, rows, extra, assumptions_for(record)


def cmd_table(args, catalog):
    rows = []
    notes = []
    for record in catalog.values():
        row = table_row(record)
        rows.append({
            "atom": row.atom,
            "n": row.n,
            "r_at_angstrom": fixed(row.r_at),
            "R_xy_bohr": decimals(row.R_xy),
            "E_xy_eV": decimals(row.E_xy),
            "R_z_bohr": decimals(row.R_z),
            "E_z_eV": decimals(row.E_z),
            "R_xy_bohr_full": fixed(row.R_xy),
            "E_xy_eV_full": fixed(row.E_xy),
            "R_z_bohr_full": fixed(row.R_z),
            "E_z_eV_full": fixed(row.E_z),
        })
        notes += [n for n in assumptions_for(record) if n not in notes]
    return {}, rows, {}, notes


def cmd_lifetime(args, catalog):
    record = get_species(args.species, catalog)
    if record.model != "helium_two_electron":
        raise UsageError(f"no transition-dipole model for {record.name} ({record.model})")
    photon = args.photon_energy if args.photon_energy is not None else excitation_energy_helium()
    if not photon > 0:
        raise UsageError("photon energy must be positive")
    report = full_report(record, photon)
    est = multipole_suppression(photon, args.system_size)
    rows = []
    for term in TERMS:
        st = report.states[term]
        rate = radiative_rate(photon, st.transition_dipole_ea)
        tau = 1.0 / rate if rate > 0 else None
        forbidden = rate == 0.0
        rows.append({
            "term": term,
            "transition_dipole_ea": fixed(st.transition_dipole_ea),
            "photon_energy_eV": fixed(photon),
            "rate_per_s": fixed(rate),
            "lifetime_s": fixed(tau),
            "lifetime_ns": fixed(tau * 1e9) if tau else None,
            "reference_lifetime_ns": fixed(REFERENCE_SIGMA_G_LIFETIME_S * 1e9) if term == "sigma_g" else None,
            "ratio_to_reference": fixed(tau / REFERENCE_SIGMA_G_LIFETIME_S) if tau and term == "sigma_g" else None,
            "dipole_forbidden": forbidden,
            "metastable": st.metastable,
            "ka0": fixed(est.ka0) if forbidden else None,
            "multipole_suppression": fixed(est.suppression) if forbidden else None,
            "metastable_estimate_s": fixed(est.lifetime_estimate_s) if forbidden else None,
            "metastable_lower_bound_s": fixed(METASTABLE_LOWER_BOUND_S) if forbidden else None,
        })
    inputs = {"species": record.name, "photon_energy_eV": fixed(photon), "system_size_angstrom": args.system_size}
    return inputs, rows, {}, report.assumptions


def cmd_geometry(args, catalog):
    record = get_species(args.species, catalog)
    rows = []
    for term in TERMS:
        g = species_state(record, term).geometry
        rows.append({
            "term": term,
            "kind": KIND_FOR_TERM[term],
            "R0_bohr": fixed(g.R0),
            "R0_angstrom": fixed(length_bohr_to_angstrom(g.R0)),
            "theta_deg": fixed(g.theta_contact),
            "sphere_radius_bohr": fixed(g.sphere_radius),
            "lobe_amplitude_bohr": fixed(g.lobe_amplitude),
        })
    return {"species": record.name}, rows, {}, assumptions_for(record)


def cmd_report(args, catalog):
    record = get_species(args.species, catalog)
    rep = full_report(record, args.photon_energy)
    rows = []
    for term in TERMS:
        st = rep.states[term]
        rows.append({
            "term": term,
            "R0_bohr": fixed(st.R0_bohr),
            "theta_deg": fixed(st.theta_deg),
            "binding_energy_eV": fixed(st.binding_energy_ev),
            "transition_dipole_ea": fixed(st.transition_dipole_ea),
            "lifetime_s": fixed(st.lifetime_s),
            "metastable": st.metastable,
            "note": st.note,
        })
    extra = {
        "model": rep.model,
        "coupling_coefficient": fixed(rep.coupling.value),
        "coupling_provenance": rep.coupling.provenance,
        "molecule_size_angstrom": fixed(rep.molecule_size_angstrom),
        "cross_section_ratio": fixed(rep.cross_section_ratio),
        "excitation_energy_eV": fixed(rep.excitation_energy_ev),
    }
    return {"species": record.name, "photon_energy_eV": args.photon_energy}, rows, extra, rep.assumptions


COMMANDS = {
    "levels": cmd_levels,
    "curve": cmd_curve,
    "table": cmd_table,
    "lifetime": cmd_lifetime,
    "geometry": cmd_geometry,
    "report": cmd_report,
}


# -- rendering ----------------------------------------------------------------


def render_json(command, inputs, rows, extra, assumptions):
    results = {k: _json_value(v) for k, v in extra.items()}
    results["rows"] = [{k: _json_value(v) for k, v in row.items()} for row in rows]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "assumptions": list(assumptions),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows):
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow("" if v is None else ("true" if v is True else "false" if v is False else v)
                            for v in row.values())
    return buf.getvalue()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--catalog", metavar="FILE", help="user catalog file (name model n value...)")

    parser = argparse.ArgumentParser(
        prog="quasimol",
        description="Resonance dipole-dipole quasimolecules: levels, geometry, energies, lifetimes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", parents=[common], help="secular eigenvalues per symmetry block")
    p.add_argument("species")
    p.add_argument("--at-R", dest="at_R", type=float, metavar="A", help="internuclear distance in Bohr")
    p.add_argument("--coupling-ev", type=float, help="override the coupling A in eV")

    p = sub.add_parser("curve", parents=[common], help="potential energy curve with hard wall")
    p.add_argument("species")
    p.add_argument("term", choices=TERMS)
    p.add_argument("R_min", type=float)
    p.add_argument("R_max", type=float)
    p.add_argument("steps", type=int)

    sub.add_parser("table", parents=[common], help="equilibrium distances and binding energies")

    p = sub.add_parser("lifetime", parents=[common], help="transition dipoles and radiative lifetimes")
    p.add_argument("species")
    p.add_argument("--photon-energy", type=float, metavar="EV")
    p.add_argument("--system-size", type=float, default=1.0, metavar="ANGSTROM",
                   help="radiating-system size for the (k a0)^2 estimate")

    p = sub.add_parser("geometry", parents=[common], help="contact-model equilibrium geometry")
    p.add_argument("species")

    p = sub.add_parser("report", parents=[common], help="full per-species report")
    p.add_argument("species")
    p.add_argument("--photon-energy", type=float, metavar="EV")
    return parser


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        catalog = load_catalog(args.catalog)
        inputs, rows, extra, assumptions = COMMANDS[args.command](args, catalog)
    except (UsageError, UnknownSpeciesError, CatalogError, OSError) as exc:
        print(f"quasimol {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, RuntimeError, ValueError, ArithmeticError) as exc:
        print(f"quasimol {args.command}: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.format == "csv":
        stdout.write(render_csv(rows))
    else:
        stdout.write(render_json(args.command, inputs, rows, extra, assumptions))
    return 0


if __name__ == "__main__":
    sys.exit(main())
