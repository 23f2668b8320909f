"""First-order degenerate perturbation theory over the excitation-exchange basis.

Two cases are supported:

``helium_12``
    Two helium atoms; basis functions are products over the electrons
    (1, 2) of atom A and (1', 2') of atom B, with one atom excited to
    ``1s 2p``.  Three axes x two excited sites x two electron slots.
``one_electron_6``
    Two one-valent-electron atoms, ``ns`` + ``n'p``.  Three axes x two sites.

The internuclear axis is z, so the dipole-dipole tensor is diag(1, 1, -2).
"""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from quasimol.integrals import dipole_s_p, overlap
from quasimol.orbitals import AXES, EffectiveCharges, OrbitalSpec, helium_orbitals

CASES = ("helium_12", "one_electron_6")
TENSOR = {"x": 1.0, "y": 1.0, "z": -2.0}
TERM_SYMBOLS = {"pi_u": "¹Π_u", "sigma_g": "¹Σ_g"}


@dataclass(frozen=True)
class BasisLabel:
    case: str
    axis: str
    site: str  # which atom carries the excitation: "A" or "B"
    slot: str | None = None  # helium only: which electron of the excited atom is in p

    @property
    def orbitals(self):
        """Orbital symbols per electron: ``g`` ground s, ``i`` inner 1s, or a p axis."""
        if self.case == "one_electron_6":
            return ("g", self.axis) if self.site == "B" else (self.axis, "g")
        excited = (self.axis, "i") if self.slot == "first" else ("i", self.axis)
        return ("g", "g") + excited if self.site == "B" else excited + ("g", "g")

    def ket(self):
        syms = {"g": "0̃" if self.case == "helium_12" else "0", "i": "0"}
        return "|" + "".join(syms.get(o, o) for o in self.orbitals) + "⟩"


def basis_labels(case):
    """Basis in the conventional order, axis by axis.

    helium_12: |0̃0̃0x⟩, |0̃0̃x0⟩, |0x0̃0̃⟩, |x00̃0̃⟩, then y, then z.
    one_electron_6: |0x⟩, |x0⟩, then y, then z.
    """
    if case == "helium_12":
        return [BasisLabel(case, ax, site, slot)
                for ax in AXES for site, slot in product("BA", ("second", "first"))]
    if case == "one_electron_6":
        return [BasisLabel(case, ax, site) for ax in AXES for site in "BA"]
    raise ValueError(f"unknown case {case!r}")


def block_labels(case, axis):
    return [b for b in basis_labels(case) if b.axis == axis]


def default_orbitals(case, charges=EffectiveCharges()):
    """Orbital table keyed by symbol; p orbitals keyed by axis."""
    if case == "helium_12":
        ground, inner, p = helium_orbitals(charges)
        table = {"g": ground, "i": inner}
    else:
        table = {"g": OrbitalSpec.hydrogenic(1, 0, 1.0)}
        p = OrbitalSpec.hydrogenic(2, 1, 1.0)
    table.update({ax: p.with_angular("p" + ax) for ax in AXES})
    return table


def _one_electron_tables(orbs):
    syms = list(orbs)
    ovl = {(a, b): overlap(orbs[a], orbs[b]) for a in syms for b in syms}
    dip = {}
    for a, b in product(syms, syms):
        oa, ob = orbs[a], orbs[b]
        for c in AXES:
            if oa.l == 1 and ob.l == 0:
                dip[a, b, c] = dipole_s_p(ob, oa, c)
            elif oa.l == 0 and ob.l == 1:
                dip[a, b, c] = dipole_s_p(oa, ob, c)
            else:
                dip[a, b, c] = 0.0
    return ovl, dip


def _electron_sites(case):
    return ((0, 1), (2, 3)) if case == "helium_12" else ((0,), (1,))


def product_matrix_element(bra, ket, ops, ovl, dip):
    """<bra| prod of one-electron operators |ket>; ``ops`` maps electron -> dipole axis."""
    value = 1.0
    for e, (b, k) in enumerate(zip(bra, ket)):
        value *= dip[b, k, ops[e]] if e in ops else ovl[b, k]
        if value == 0.0:
            return 0.0
    return value


def interaction_matrix(case, orbitals=None, R=1.0):
    """Full dipole-dipole matrix over :func:`basis_labels`, in Hartree.

    Assembled electron pair by electron pair from one-electron overlaps and
    dipole integrals, without assuming the block structure.
    """
    orbs = orbitals or default_orbitals(case)
    ovl, dip = _one_electron_tables(orbs)
    labels = basis_labels(case)
    site_a, site_b = _electron_sites(case)
    n = len(labels)
    V = np.zeros((n, n))
    for i, j in product(range(n), range(n)):
        bra, ket = labels[i].orbitals, labels[j].orbitals
        total = 0.0
        for e, e2, c in product(site_a, site_b, AXES):
            total += TENSOR[c] * product_matrix_element(bra, ket, {e: c, e2: c}, ovl, dip)
        V[i, j] = total / R**3
    return V, labels


def build_block(case, axis, A):
    """Symmetric block of the secular matrix for one axis, in the units of ``A``."""
    if not A > 0:
        raise ValueError("coupling A must be positive")
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}")
    size = 4 if case == "helium_12" else 2
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    half = size // 2
    M = np.zeros((size, size))
    M[:half, half:] = TENSOR[axis] * A
    M[half:, :half] = TENSOR[axis] * A
    return M


def jacobi_eigh(matrix, rtol=1e-12, max_sweeps=100):
    """Cyclic Jacobi diagonalization of a small real symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` sorted ascending, vectors as
    columns.  Sweeps stop once the off-diagonal Frobenius norm falls below
    ``rtol`` times the matrix norm.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0, atol=1e-14 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= rtol * scale or off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta**2 + 1.0))
                c = 1.0 / np.sqrt(t**2 + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q], rot[q, p] = s, -s
                a = rot.T @ a @ rot
                v = v @ rot
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


@dataclass
class SecularSpectrum:
    block_axis: str
    eigenvalues_in_A: np.ndarray
    eigenvectors: np.ndarray
    labels: list | None = None
    term_labels: dict = field(default_factory=dict)

    def levels(self, tol=1e-9):
        """Distinct eigenvalues (in units of A) with their degeneracies."""
        out = []
        for w in self.eigenvalues_in_A:
            if out and abs(w - out[-1][0]) <= tol:
                out[-1][1] += 1
            else:
                out.append([float(w), 1])
        return [(0.0 if abs(v) <= tol else v, m) for v, m in out]


def _term_for_axis(axis):
    return "sigma_g" if axis == "z" else "pi_u"


def _fix_sign(vec, tol=1e-12):
    for c in vec:
        if abs(c) > tol:
            return vec if c > 0 else -vec
    return vec


def _axis_adapt(vectors, labels):
    """Rotate a degenerate subspace so each vector lives on a single axis."""
    axis_index = np.diag([AXES.index(b.axis) for b in labels]).astype(float)
    projected = vectors.T @ axis_index @ vectors
    _, u = jacobi_eigh(0.5 * (projected + projected.T))
    return vectors @ u


def exchange_partner(label):
    """Label obtained by swapping the two atoms (electron pairs 1,2 <-> 1',2')."""
    return BasisLabel(label.case, label.axis, "A" if label.site == "B" else "B", label.slot)


def _exchange_adapt(vec, labels):
    """Project onto the exchange eigenspace the vector already (nearly) lies in."""
    index = {b: k for k, b in enumerate(labels)}
    perm = [index.get(exchange_partner(b)) for b in labels]
    if None in perm:
        return vec
    swapped = vec[perm]
    parity = 1.0 if np.dot(vec, swapped) >= 0 else -1.0
    out = np.empty_like(vec)
    for k, j in enumerate(perm):
        # pairwise so that partner coefficients come out exactly equal or opposite
        out[k] = (vec[k] + parity * vec[j]) / 2 if k < j else parity * ((vec[j] + parity * vec[k]) / 2)
    return out / np.linalg.norm(out)


def solve_block(matrix, A=1.0, labels=None, block_axis=None, tol=1e-9):
    """Diagonalize a secular block and canonicalize its bound-state vectors.

    When ``labels`` are given, degenerate bound subspaces are rotated onto
    axis-pure combinations and every bound vector is projected onto its
    atom-exchange parity; each bound vector is signed so its first non-zero
    coefficient is positive.  Zero and positive levels keep
    whatever orthonormal basis the solver produced.
    """
    w, v = jacobi_eigh(matrix)
    w_A = w / A
    v = v.copy()
    i = 0
    while i < len(w_A) and w_A[i] < -tol:
        j = i
        while j + 1 < len(w_A) and abs(w_A[j + 1] - w_A[i]) <= tol:
            j += 1
        if j > i and labels is not None:
            v[:, i:j + 1] = _axis_adapt(v[:, i:j + 1], labels)
        for k in range(i, j + 1):
            if labels is not None:
                v[:, k] = _exchange_adapt(v[:, k], labels)
            v[:, k] = _fix_sign(v[:, k])
        i = j + 1
    if block_axis is None and labels is not None:
        axes = {b.axis for b in labels}
        block_axis = axes.pop() if len(axes) == 1 else "full"
    terms = {}
    for k in range(len(w_A)):
        if w_A[k] >= -tol:
            break
        if labels is not None:
            weights = {}
            for b, c in zip(labels, v[:, k]):
                weights[b.axis] = weights.get(b.axis, 0.0) + c**2
            axis = max(weights, key=weights.get)
        else:
            axis = block_axis
        if axis in AXES:
            terms[round(float(w_A[k]), 9)] = _term_for_axis(axis)
    return SecularSpectrum(block_axis or "unknown", w_A, v, labels, terms)


def solve_case(case, A=1.0):
    """Per-axis spectra for ``case``, keyed by axis."""
    return {ax: solve_block(build_block(case, ax, A), A, block_labels(case, ax), ax) for ax in AXES}


def bound_state_vector(spectrum):
    """Coefficients of the lowest (most bound) state, or ``None`` if nothing is bound."""
    if spectrum.eigenvalues_in_A[0] >= 0:
        return None
    return spectrum.eigenvectors[:, 0].copy()
