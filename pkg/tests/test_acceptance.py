"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line (visible with ``-s``); the
same lines are repeated in the terminal summary by ``conftest.py``.
"""
import io
import json
import math
import os
import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasimol.catalog import ALKALIS, CATALOG, full_report, get_species, reproduce_table, table_row
from quasimol.cli import main
from quasimol.geometry import contact_distance, grid_scan_contact
from quasimol.integrals import (
    dipole_s_p,
    dipole_s_p_quad,
    helium_coupling,
    helium_coupling_from_integrals,
    hydrogen_radial_dipole_exact,
    one_electron_coupling,
    overlap,
    overlap_quad,
    radial_dipole_integral,
)
from quasimol.observables import (
    excitation_energy_helium,
    helium_sigma_g_dipole_closed,
    multipole_suppression,
    radiative_lifetime,
    radiative_rate,
    transition_dipole_helium,
)
from quasimol.orbitals import EffectiveCharges, OrbitalSpec, helium_orbitals
from quasimol.secular import (
    AXES,
    bound_state_vector,
    build_block,
    interaction_matrix,
    jacobi_eigh,
    solve_block,
    solve_case,
)

RESULTS = []


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        line = f"[FAIL] {number:2d}. {title}"
        RESULTS.append(line)
        print("\n" + line)
        raise
    line = f"[PASS] {number:2d}. {title}"
    RESULTS.append(line)
    print("\n" + line)


def spectrum(case, axis, A=1.0):
    return solve_case(case, A)[axis].eigenvalues_in_A


def test_01_helium_coupling():
    with criterion(1, "helium coupling coefficient 0.0600 +- 0.0005"):
        c = helium_coupling(EffectiveCharges(27 / 16, 2, 1 / 2)).value
        assert abs(c - 0.0600) <= 0.0005
        assert c == pytest.approx(0.0599805, abs=5e-7)


def test_02_secular_spectra():
    with criterion(2, "secular spectra exact to 1e-10"):
        expected = {
            ("helium_12", "x"): [-2, 0, 0, 2],
            ("helium_12", "y"): [-2, 0, 0, 2],
            ("helium_12", "z"): [-4, 0, 0, 4],
            ("one_electron_6", "x"): [-1, 1],
            ("one_electron_6", "y"): [-1, 1],
            ("one_electron_6", "z"): [-2, 2],
        }
        for A in (1.0, 0.0599805, 3.7e-3):
            for (case, axis), want in expected.items():
                got = spectrum(case, axis, A)
                np.testing.assert_allclose(got, want, rtol=0, atol=1e-10)


def test_03_equilibrium_geometry():
    with criterion(3, "equilibrium geometry He and H"):
        he_p = contact_distance(16 / 27, 4.0, "perpendicular")
        assert abs(he_p.R0 - 1.203) <= 0.005
        assert abs(he_p.theta_contact - 28.4) <= 0.3
        he_z = contact_distance(16 / 27, 4.0, "axial")
        assert abs(he_z.R0 - 4.593) <= 0.001
        h_p = contact_distance(1.0, 4.0, "perpendicular")
        assert abs(h_p.R0 - 1.76) <= 0.01
        assert abs(h_p.theta_contact - 32.8) <= 0.3
        h_z = contact_distance(1.0, 4.0, "axial")
        assert h_z.R0 == pytest.approx(5.0, abs=1e-10)


def test_04_binding_energies(he_report, h_report):
    with criterion(4, "binding energies He and H"):
        he, h = he_report.states, h_report.states
        assert abs(he["pi_u"].binding_energy_ev - -1.875) <= 0.005
        assert abs(he["sigma_g"].binding_energy_ev - -0.067) <= 0.002
        assert abs(h["pi_u"].binding_energy_ev - -2.77) <= 0.01
        assert abs(h["sigma_g"].binding_energy_ev - -0.24) <= 0.01


def test_05_hydrogen_coupling():
    with criterion(5, "hydrogen coupling 0.555 +- 0.001"):
        I = radial_dipole_integral(OrbitalSpec.hydrogenic(1, 0, 1.0), OrbitalSpec.hydrogenic(2, 1, 1.0))
        assert I == pytest.approx(hydrogen_radial_dipole_exact(), rel=1e-12)
        c = one_electron_coupling(I).value
        assert abs(c - 0.555) <= 0.001


ALKALI_TABLE = {
    "Li": (3.70, -0.54, 5.75, -0.29),
    "Na": (4.53, -0.29, 7.02, -0.16),
    "K": (5.54, -0.16, 8.59, -0.09),
    "Rb": (6.03, -0.12, 9.36, -0.07),
    "Cs": (6.47, -0.10, 10.04, -0.05),
}


def test_06_alkali_table():
    with criterion(6, "alkali table 5 rows x 4 columns exact"):
        rows = reproduce_table()
        assert [r.atom for r in rows] == list(ALKALI_TABLE)
        mismatches = [(r.atom, (r.R_xy, r.E_xy, r.R_z, r.E_z)) for r in rows
                      if (r.R_xy, r.E_xy, r.R_z, r.E_z) != ALKALI_TABLE[r.atom]]
        assert not mismatches


def test_07_transition_dipoles():
    with criterion(7, "transition dipoles: pi_u exactly 0, sigma_g -0.490 +- 0.002"):
        spectra = solve_case("helium_12")
        for axis in ("x", "y"):
            d = transition_dipole_helium(bound_state_vector(spectra[axis]), axis=axis)
            assert np.all(d == 0.0)
        d = transition_dipole_helium(bound_state_vector(spectra["z"]), axis="z")
        assert d[0] == d[1] == 0.0
        assert abs(d[2] - -0.490) <= 0.002


def _oracle_lifetime_s(energy_ev, dipole):
    # independent atomic-units evaluation with exact rational prefactors
    omega = Fraction(str(energy_ev)) / Fraction("27.2114")
    rate = Fraction(4, 3) * omega**3 * Fraction(dipole) ** 2 / Fraction("137.036") ** 3
    return float(Fraction("2.41888e-17") / rate)


def test_08_lifetimes():
    with criterion(8, "sigma_g lifetime oracle and order; pi_u metastable estimate"):
        d = helium_sigma_g_dipole_closed()
        tau = radiative_lifetime(21.22, d)
        assert tau == pytest.approx(_oracle_lifetime_s(21.22, d), rel=1e-6)
        assert 0.18e-9 / 3 <= tau <= 3 * 0.18e-9
        assert excitation_energy_helium() == pytest.approx(21.22, abs=0.005)
        est = multipole_suppression(20.0, 1.0)
        assert 0.5e-4 <= est.suppression <= 2e-4
        assert 0.5e-5 <= est.lifetime_estimate_s <= 2e-5


def test_09_molecule_sizes():
    with criterion(9, "molecule sizes Li ~6.1 A and Cs ~10.6 A"):
        li = full_report(get_species("Li")).molecule_size_angstrom
        cs = full_report(get_species("Cs")).molecule_size_angstrom
        assert li == pytest.approx(6.1, abs=0.05)
        assert cs == pytest.approx(10.6, abs=0.05)
        assert abs(li - 6) / 6 <= 0.10
        assert abs(cs - 10) / 10 <= 0.10


def _char_poly(m):
    """Characteristic polynomial coefficients by Faddeev-LeVerrier (leading 1 first)."""
    n = m.shape[0]
    coeffs = [1.0]
    M = np.zeros_like(m)
    for k in range(1, n + 1):
        M = m @ M + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(m @ M) / k)
    return coeffs


def _biquadratic_roots(coeffs, tol=1e-12):
    """Roots of x**4 + c2 x**2 with vanishing odd and constant terms."""
    one, c3, c2, c1, c0 = coeffs
    assert max(abs(c3), abs(c1), abs(c0)) <= tol
    r = math.sqrt(-c2)
    return sorted([-r, 0.0, 0.0, r])


def test_10_oracle_equivalence():
    with criterion(10, "oracle equivalence: eigenvalues, contact grid, quadrature"):
        V, labels = interaction_matrix("helium_12")
        full = jacobi_eigh(V)[0]
        union = []
        for axis in AXES:
            union += _biquadratic_roots(_char_poly(build_block("helium_12", axis, 1.0)))
        scale = np.max(np.abs(V)) / 2.0
        np.testing.assert_allclose(full / scale, sorted(union), rtol=0, atol=1e-10)
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(V)), full, rtol=0, atol=1e-12)

        for s, L, kind in [(16 / 27, 4.0, "perpendicular"), (1.0, 4.0, "perpendicular"),
                           (16 / 27, 4.0, "axial")]:
            g = contact_distance(s, L, kind)
            R_grid, theta_grid, dR = grid_scan_contact(s, L, kind, n_R=2000, n_theta=2000)
            assert abs(g.R0 - R_grid) <= 2 * dR
            assert abs(g.theta_contact - theta_grid) <= 0.5

        ground, inner, p = helium_orbitals()
        h1s, h2p = OrbitalSpec.hydrogenic(1, 0, 1.0), OrbitalSpec.hydrogenic(2, 1, 1.0)
        pairs = [
            (overlap(ground, inner), overlap_quad(ground, inner)),
            (dipole_s_p(ground, p), dipole_s_p_quad(ground, p, "z")),
            (dipole_s_p(h1s, h2p), dipole_s_p_quad(h1s, h2p, "z")),
            (radial_dipole_integral(h1s, h2p), radial_dipole_integral(h1s, h2p, "quadrature")),
            (helium_coupling().value, helium_coupling_from_integrals(method="quadrature").value),
            (helium_sigma_g_dipole_closed(),
             transition_dipole_helium(bound_state_vector(solve_case("helium_12")["z"]),
                                      axis="z", method="quadrature")[2]),
        ]
        for closed, quad in pairs:
            assert closed == pytest.approx(quad, rel=1e-8)


@settings(max_examples=10, deadline=None)
@given(k=st.floats(0.25, 4.0))
def _geometry_scales(k):
    for kind in ("perpendicular", "axial"):
        base = contact_distance(16 / 27, 4.0, kind)
        scaled = contact_distance(k * 16 / 27, k * 4.0, kind)
        assert scaled.R0 == pytest.approx(k * base.R0, rel=1e-9)
        assert scaled.theta_contact == pytest.approx(base.theta_contact, abs=1e-5)


@settings(max_examples=50, deadline=None)
@given(A=st.floats(1e-4, 10.0))
def _eigenvalues_linear_in_A(A):
    for case in ("helium_12", "one_electron_6"):
        for axis in AXES:
            w = solve_block(build_block(case, axis, A), A).eigenvalues_in_A
            np.testing.assert_allclose(w, spectrum(case, axis), rtol=0, atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(E=st.floats(1.0, 50.0), d=st.floats(0.01, 2.0), f=st.floats(0.5, 3.0))
def _rate_scaling(E, d, f):
    w = radiative_rate(E, d)
    assert radiative_rate(f * E, d) == pytest.approx(f**3 * w, rel=1e-12)
    assert radiative_rate(E, f * d) == pytest.approx(f**2 * w, rel=1e-12)


def test_11_invariances():
    with criterion(11, "invariances: geometry scaling, A-linearity, rate scaling, cubic law"):
        _geometry_scales()
        _eigenvalues_linear_in_A()
        _rate_scaling()
        for record in CATALOG.values():
            row = table_row(record)
            assert row.E_z / row.E_xy == pytest.approx(2 * (row.R_xy / row.R_z) ** 3, rel=1e-12)


def _cli(*argv):
    out = io.StringIO()
    assert main(list(argv), stdout=out) == 0
    return out.getvalue()


def test_12_determinism_and_parity():
    with criterion(12, "CLI determinism and CSV/JSON parity"):
        cmd = [sys.executable, "-m", "quasimol.cli", "table", "--format", "csv"]
        procs = [subprocess.Popen(cmd, stdout=subprocess.PIPE, env={**os.environ, "PYTHONHASHSEED": seed})
                 for seed in ("0", "1")]
        outputs = [p.communicate()[0] for p in procs]
        assert all(p.returncode == 0 for p in procs)
        assert outputs[0] == outputs[1] and outputs[0]
        for argv in [("table",), ("lifetime", "He"), ("curve", "He", "sigma_g", "4.6", "20", "100")]:
            assert _cli(*argv) == _cli(*argv)
            js = json.loads(_cli(*argv))["results"]["rows"]
            cs = _cli(*argv, "--format", "csv").splitlines()
            header = cs[0].split(",")
            assert header == list(js[0])
            for jrow, line in zip(js, cs[1:], strict=True):
                for key, cell in zip(header, line.split(",")):
                    value = jrow[key]
                    if isinstance(value, bool):
                        assert cell == str(value).lower()
                    elif value is None:
                        assert cell == ""
                    elif isinstance(value, (int, float)):
                        assert float(cell) == value
                    else:
                        assert cell == value
