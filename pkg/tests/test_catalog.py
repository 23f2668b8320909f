import math

import pytest

from quasimol.catalog import (
    ALKALIS,
    CATALOG,
    CatalogError,
    UnknownSpeciesError,
    full_report,
    get_species,
    load_catalog,
    parse_catalog,
    reproduce_table,
    table_row,
)
from quasimol.constants import TABLE_BOHR_RADIUS_ANGSTROM

REFERENCE_TABLE = {
    # atom: (n, r_at, R_xy, E_xy, R_z, E_z)
    "Li": (2, 1.520, 3.70, -0.54, 5.75, -0.29),
    "Na": (3, 1.858, 4.53, -0.29, 7.02, -0.16),
    "K": (4, 2.272, 5.54, -0.16, 8.59, -0.09),
    "Rb": (5, 2.475, 6.03, -0.12, 9.36, -0.07),
    "Cs": (6, 2.655, 6.47, -0.10, 10.04, -0.05),
}


@pytest.mark.parametrize("name, r_at, n", [("Li", 1.520, 2), ("Cs", 2.655, 6)])
def test_get_species(name, r_at, n):
    rec = get_species(name)
    assert rec.atomic_radius == r_at
    assert rec.n == n


def test_unknown_species_lists_catalog():
    with pytest.raises(UnknownSpeciesError) as err:
        get_species("Xe")
    assert "Li" in str(err.value) and "Xe" in str(err.value)


def test_record_conventions():
    he, h = CATALOG["He"], CATALOG["H"]
    assert he.ground_surface_radius == pytest.approx(16 / 27, abs=1e-10)
    assert he.lobe_amplitude == pytest.approx(4.0, abs=1e-10)
    assert h.ground_surface_radius == pytest.approx(1.0, abs=1e-10)
    assert h.lobe_amplitude == pytest.approx(4.0, abs=1e-10)
    for name in ALKALIS:
        rec = CATALOG[name]
        assert rec.ground_surface_radius == rec.lobe_amplitude == rec.atomic_radius / TABLE_BOHR_RADIUS_ANGSTROM


def test_table_reproduced_exactly():
    for row in reproduce_table():
        assert (row.n, row.r_at, row.R_xy, row.E_xy, row.R_z, row.E_z) == REFERENCE_TABLE[row.atom]


def test_unrounded_li_axial_distance():
    li = next(r for r in reproduce_table(rounded=False) if r.atom == "Li")
    assert li.R_z == pytest.approx(2 * 1.520 / TABLE_BOHR_RADIUS_ANGSTROM, abs=1e-8)
    assert li.R_z == pytest.approx(5.747, abs=1e-3)


def test_universal_contact_ratio():
    ratios = [row.R_xy / CATALOG[row.atom].lobe_amplitude for row in reproduce_table(rounded=False)]
    assert max(ratios) - min(ratios) < 1e-8
    assert ratios[0] == pytest.approx(1.2893, abs=1e-4)


@pytest.mark.parametrize("name", list(CATALOG))
def test_cubic_law_identity(name):
    row = table_row(CATALOG[name])
    assert row.E_z / row.E_xy == pytest.approx(2 * (row.R_xy / row.R_z) ** 3, rel=1e-12)


def test_helium_report(he_report):
    pi, sg = he_report.states["pi_u"], he_report.states["sigma_g"]
    assert pi.R0_bohr == pytest.approx(1.203, abs=5e-3)
    assert pi.binding_energy_ev == pytest.approx(-1.875, abs=5e-3)
    assert pi.transition_dipole_ea == 0.0
    assert pi.metastable and pi.lifetime_s == math.inf
    assert sg.R0_bohr == pytest.approx(4.6, abs=0.01)
    assert sg.binding_energy_ev == pytest.approx(-0.067, abs=2e-3)
    assert sg.transition_dipole_ea == pytest.approx(-0.49, abs=2e-3)
    assert math.isfinite(sg.lifetime_s) and not sg.metastable
    assert he_report.excitation_energy_ev == pytest.approx(21.22, abs=5e-3)


def test_hydrogen_report(h_report):
    pi, sg = h_report.states["pi_u"], h_report.states["sigma_g"]
    assert pi.R0_bohr == pytest.approx(1.76, abs=0.01)
    assert pi.binding_energy_ev == pytest.approx(-2.77, abs=0.01)
    assert sg.R0_bohr == pytest.approx(5.0, abs=1e-8)
    assert sg.binding_energy_ev == pytest.approx(-0.24, abs=0.01)


def test_potassium_report():
    rep = full_report(get_species("K"))
    assert round(rep.states["pi_u"].R0_bohr, 2) == 5.54
    assert round(rep.states["pi_u"].binding_energy_ev, 2) == -0.16
    assert round(rep.states["sigma_g"].R0_bohr, 2) == 8.59
    assert round(rep.states["sigma_g"].binding_energy_ev, 2) == -0.09
    assert any("reconstructed" in a for a in rep.assumptions)


@pytest.mark.parametrize("name", list(CATALOG))
def test_reported_states_are_bound(name):
    rep = full_report(CATALOG[name])
    for st in rep.states.values():
        assert st.binding_energy_ev < 0
    assert rep.states["pi_u"].transition_dipole_ea == 0.0


def test_sizes_bracket_six_to_ten_angstrom():
    li = full_report(get_species("Li")).molecule_size_angstrom
    cs = full_report(get_species("Cs")).molecule_size_angstrom
    assert li == pytest.approx(6.1, abs=0.05)
    assert cs == pytest.approx(10.6, abs=0.05)


def test_parse_user_catalog(tmp_path):
    text = """
    # comment line
    He2  helium_two_electron 1  1.6875 2 0.5
    D    hydrogen_analytic   1  1.0     # same as H
    Fr   alkali_radius       7  2.8
    Li   alkali_radius       2  1.60    # override
    """
    path = tmp_path / "cat.txt"
    path.write_text(text)
    cat = load_catalog(path)
    assert cat["He2"].lobe_amplitude == pytest.approx(4.0, abs=1e-10)
    assert cat["D"].ground_surface_radius == pytest.approx(1.0, abs=1e-10)
    assert cat["Fr"].atomic_radius == 2.8
    assert cat["Li"].atomic_radius == 1.60
    assert list(cat)[:7] == list(CATALOG)
    assert CATALOG["Li"].atomic_radius == 1.520


@pytest.mark.parametrize("line", [
    "X alkali_radius",
    "X alkali_radius two 1.0",
    "X alkali_radius 2 -1.0",
    "X helium_two_electron 1 1.0 2.0",
    "X molecular 1 1.0",
    "X hydrogen_analytic 1 0.0",
])
def test_bad_catalog_lines(line):
    with pytest.raises(CatalogError):
        parse_catalog(line)
