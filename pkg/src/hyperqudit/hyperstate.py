"""The calibrated hypergraph state map and its verification suites.

A calibrated hypergraph over [l] determines a phase function on the
configuration set (a trace of products of generalized powers, one term
per stored calibration entry) and hence a diagonal unitary in the
computational basis.  Applying it to the zero ket gives the hypergraph
state: the flat state whose phase table is the phase function itself.

The stabilizer operators, the hypergraph basis, the covariance of the
construction under ordinal functions and local maximal entangleability
are all checked here, exactly on phase tables where flatness is
preserved and through dense matrices (tolerance 1e-9) where it is not.
"""

from __future__ import annotations

import numpy as np

from .cyclicity import power
from .errors import GradeMismatch, TooLarge, WrongBasis
from .hypergraph import CalibratedHypergraph, OrdinalMorphism, apply_morphism
from .states import (
    COMPUTATIONAL,
    Configuration,
    FlatState,
    all_configurations,
    apply_he_morphism,
    apply_pauli_z,
    config_add,
    config_index,
    config_sub,
    dense_cap,
    ef_transpose,
    is_orthogonal,
    phase_difference_counts,
    to_dense,
)

__all__ = [
    "phase_function",
    "phase_table",
    "build_state",
    "apply_d",
    "stabilizer_apply",
    "basis_state",
    "check_covariance",
    "check_stabilizer_pushforward",
    "lme_orthonormal",
    "lme_check",
    "dense_stabilizer_matrix",
    "dense_he_matrix",
]


def phase_function(hg: CalibratedHypergraph, x: Configuration) -> int:
    """sigma(x): sum over stored entries of value * tr(prod of generalized powers)."""
    if len(x) != hg.l:
        raise GradeMismatch("configuration grade does not match the hypergraph")
    ring = hg.ring
    total = 0
    for edge, w, val in hg.stored_entries():
        prod = ring.one
        for r in edge:
            prod = prod * power(x[r], w.value(r, ring))
        total += val * ring.trace(prod)
    return total % ring.char


def phase_table(hg: CalibratedHypergraph) -> tuple[int, ...]:
    cached = getattr(hg, "_phase_table_cache", None)
    if cached is None:
        cached = tuple(phase_function(hg, x) for x in all_configurations(hg.ring, hg.l))
        hg._phase_table_cache = cached  # idempotent; hypergraphs are immutable
    return cached


def build_state(hg: CalibratedHypergraph) -> FlatState:
    """The hypergraph state: normalized, computational basis, phases = sigma."""
    return FlatState(hg.ring, hg.l, COMPUTATIONAL, -hg.l, phase_table(hg))


def apply_d(hg: CalibratedHypergraph, psi: FlatState) -> FlatState:
    """The diagonal hypergraph operator: adds sigma to every phase."""
    if psi.basis != COMPUTATIONAL:
        raise WrongBasis("the hypergraph operator acts on computational tables")
    if psi.l != hg.l:
        raise GradeMismatch("state grade does not match the hypergraph")
    m = hg.ring.char
    table = phase_table(hg)
    return psi.with_phases((v + s) % m for v, s in zip(psi.phases, table))


def stabilizer_apply(hg: CalibratedHypergraph, a: Configuration, psi: FlatState) -> FlatState:
    """The stabilizer operator of a: conjugate of Pauli X(a) by the hypergraph operator.

    On a computational phase table the new value at x is the old value at
    x + a plus sigma(x) - sigma(x + a); the hypergraph state itself is
    left invariant.
    """
    if psi.basis != COMPUTATIONAL:
        raise WrongBasis("stabilizers act on computational tables")
    if psi.l != hg.l or len(a) != hg.l:
        raise GradeMismatch("grades do not match")
    ring = hg.ring
    m = ring.char
    sigma = phase_table(hg)
    out = []
    for x in all_configurations(ring, hg.l):
        ix = config_index(ring, x)
        ixa = config_index(ring, config_add(x, a))
        out.append((psi.phases[ixa] + sigma[ix] - sigma[ixa]) % m)
    return psi.with_phases(out)


def basis_state(hg: CalibratedHypergraph, a: Configuration) -> FlatState:
    """The hypergraph-basis ket of a: phases sigma(x) + <a,x>."""
    return apply_pauli_z(a, build_state(hg))


def check_covariance(hg: CalibratedHypergraph, f: OrdinalMorphism) -> bool:
    """Exact equality of the transported state and the state of the transported hypergraph."""
    lhs = apply_he_morphism(f, build_state(hg))
    rhs = build_state(apply_morphism(f, hg))
    return lhs == rhs


# -- dense operator matrices (computational-basis index order) --------------------

def _omega(ring) -> complex:
    return np.exp(2j * np.pi / ring.char)


def dense_stabilizer_matrix(hg: CalibratedHypergraph, a: Configuration) -> np.ndarray:
    """Stabilizer operator as a dense computational-basis matrix."""
    ring = hg.ring
    dim = ring.q ** hg.l
    if dim > dense_cap():
        raise TooLarge(f"dense stabilizer of dimension {dim} exceeds the cap")
    w = _omega(ring)
    sigma = phase_table(hg)
    mat = np.zeros((dim, dim), dtype=complex)
    for y in all_configurations(ring, hg.l):
        iy = config_index(ring, y)
        target = config_index(ring, config_sub(y, a))
        mat[target, iy] = w ** ((sigma[target] - sigma[iy]) % ring.char)
    return mat


def dense_he_matrix(f: OrdinalMorphism, ring) -> np.ndarray:
    """Ordinal-function action as a dense computational-basis matrix."""
    dim_in = ring.q ** f.source_size
    dim_out = ring.q ** f.target_size
    if max(dim_in, dim_out) > dense_cap():
        raise TooLarge("dense morphism action exceeds the cap")
    scale = float(ring.q) ** ((f.source_size - f.target_size) / 2.0)
    mat = np.zeros((dim_out, dim_in), dtype=complex)
    for y in all_configurations(ring, f.target_size):
        x = ef_transpose(f, y)
        mat[config_index(ring, y), config_index(ring, x)] = scale
    return mat


def check_stabilizer_pushforward(hg: CalibratedHypergraph, f: OrdinalMorphism,
                                 tol: float = 1e-9) -> bool:
    """Dense check that transported stabilizers match the image hypergraph's.

    For every a the conjugated stabilizer equals q^(l-m) times the sum of
    the image stabilizers over the transpose preimage of a; for bijective
    f this reduces to plain conjugation.
    """
    ring = hg.ring
    l, m = f.source_size, f.target_size
    if ring.q ** max(l, m) > dense_cap():
        raise TooLarge("stabilizer pushforward check exceeds the dense cap")
    image = apply_morphism(f, hg)
    hf = dense_he_matrix(f, ring)
    scale = float(ring.q) ** (l - m)
    for a in all_configurations(ring, l):
        lhs = hf @ dense_stabilizer_matrix(hg, a) @ hf.conj().T
        rhs = np.zeros((ring.q ** m, ring.q ** m), dtype=complex)
        for b in all_configurations(ring, m):
            if ef_transpose(f, b) == a:
                rhs += dense_stabilizer_matrix(image, b)
        if not np.allclose(lhs, scale * rhs, atol=tol):
            return False
    return True


# -- local maximal entangleability ---------------------------------------------

def lme_orthonormal(hg: CalibratedHypergraph) -> bool:
    """Path one: the Z-translates of the state form an orthonormal set, exactly."""
    ring = hg.ring
    psi = build_state(hg)
    translates = [apply_pauli_z(a, psi) for a in all_configurations(ring, hg.l)]
    for i, s in enumerate(translates):
        counts = phase_difference_counts(s, s)
        if s.norm_exp != -hg.l or counts[0] != ring.q ** hg.l or any(counts[1:]):
            return False  # norm not exactly 1
        for t in translates[i + 1:]:
            if not is_orthogonal(s, t):
                return False
    return True


def lme_check(hg: CalibratedHypergraph, tol: float = 1e-9) -> bool:
    """Both entangleability paths: exact orthonormality and the maximally mixed marginal.

    The second path extends the state with Z-translates against Fourier
    kets and checks the first-factor reduced density against I / q^l; it
    needs q^(2l) dense amplitudes and raises TooLarge above the cap.
    """
    if not lme_orthonormal(hg):
        return False
    ring = hg.ring
    dim = ring.q ** hg.l
    if dim * dim > max(4096, 4 * dense_cap()):
        raise TooLarge("reduced-density path exceeds the dense cap")
    psi = build_state(hg)
    cols = []
    scale = dim ** -0.5
    for a in all_configurations(ring, hg.l):
        cols.append(scale * to_dense(apply_pauli_z(a, psi)).amplitudes)
    m = np.stack(cols, axis=1)  # rows: first factor, columns: extension label
    rho = m @ m.conj().T
    return bool(np.allclose(rho, np.eye(dim) / dim, atol=tol))


def stabilizer_fixes_state(hg: CalibratedHypergraph) -> tuple[int, int]:
    """Count how many stabilizer operators leave the hypergraph state invariant."""
    psi = build_state(hg)
    good = 0
    total = 0
    for a in all_configurations(hg.ring, hg.l):
        total += 1
        if stabilizer_apply(hg, a, psi) == psi:
            good += 1
    return good, total
