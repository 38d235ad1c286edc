"""Multi-qudit configurations and exact flat states.

A grade-l configuration is a tuple of l ring elements; the configuration
set carries the trace pairing <x,y> = sum_r tr(x_r y_r) and the additive
actions of ordinal functions.  States are kept exact: a flat state is a
table of phase exponents mod p^r together with a power-of-q magnitude,
with a basis tag saying whether the table indexes the computational
basis (the Fourier transforms of the Hadamard kets, in which all states
built here live) or the Hadamard basis.  Complex amplitudes appear only
in the dense cross-check representation, tolerance 1e-9.

Configurations are enumerated in mixed radix over the canonical element
order with the last qudit varying fastest; that order fixes phase-table
indexing, serialization and tensor products.

Exact inner products of flat states are handled as integer vectors of
phase counts: sum_x omega^(d(x)) is stored as the count of each residue
d(x) and tested against zero by reduction mod the p^r-th cyclotomic
polynomial.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatch, GradeMismatch, RingMismatch, TooLarge, WrongBasis
from .galois import GaloisRing, RingElement
from .hypergraph import OrdinalMorphism

__all__ = [
    "COMPUTATIONAL",
    "HADAMARD",
    "Configuration",
    "FlatState",
    "DenseState",
    "all_configurations",
    "config_index",
    "config_at",
    "config_add",
    "config_sub",
    "trace_pairing",
    "ef",
    "ef_transpose",
    "concat",
    "apply_pauli_z",
    "apply_pauli_x",
    "apply_he_morphism",
    "tensor",
    "phase_difference_counts",
    "cyclotomic_residue",
    "sum_of_phases_is_zero",
    "is_orthogonal",
    "equal_up_to_phase",
    "to_dense",
    "fourier",
    "fourier_matrix",
    "dense_cap",
]

COMPUTATIONAL = "computational"
HADAMARD = "hadamard"

Configuration = tuple[RingElement, ...]

_DEFAULT_DENSE_CAP = 1024


def dense_cap() -> int:
    """Dimension guard for dense cross-checks; HGS_DENSE_CAP overrides."""
    raw = os.environ.get("HGS_DENSE_CAP")
    return int(raw) if raw else _DEFAULT_DENSE_CAP


# -- configurations -------------------------------------------------------------

def all_configurations(ring: GaloisRing, l: int):
    """All q^l configurations, mixed radix, last qudit fastest."""
    return itertools.product(ring.elements, repeat=l)


def config_index(ring: GaloisRing, x: Configuration) -> int:
    idx = 0
    for e in x:
        idx = idx * ring.q + ring.index(e)
    return idx


def config_at(ring: GaloisRing, l: int, idx: int) -> Configuration:
    out = []
    for _ in range(l):
        out.append(ring.elements[idx % ring.q])
        idx //= ring.q
    return tuple(reversed(out))


def config_add(x: Configuration, y: Configuration) -> Configuration:
    if len(x) != len(y):
        raise GradeMismatch("configurations of different grade")
    return tuple(a + b for a, b in zip(x, y))


def config_sub(x: Configuration, y: Configuration) -> Configuration:
    if len(x) != len(y):
        raise GradeMismatch("configurations of different grade")
    return tuple(a - b for a, b in zip(x, y))


def concat(x: Configuration, y: Configuration) -> Configuration:
    return x + y


def trace_pairing(x: Configuration, y: Configuration) -> int:
    """<x,y> = sum_r tr(x_r y_r); zero for empty configurations."""
    if len(x) != len(y):
        raise GradeMismatch("trace pairing of different grades")
    if not x:
        return 0
    ring = x[0].ring
    for a, b in zip(x, y):
        if a.ring.key != ring.key or b.ring.key != ring.key:
            raise RingMismatch("trace pairing across rings")
    return sum(ring.trace(a * b) for a, b in zip(x, y)) % ring.char


def ef(f: OrdinalMorphism, x: Configuration, ring: GaloisRing | None = None) -> Configuration:
    """Additive pushforward: entry s of the result sums x over the preimage of s.

    The ring argument is only needed for an empty source configuration,
    where the result is the zero configuration of the target grade.
    """
    if len(x) != f.source_size:
        raise GradeMismatch("configuration grade does not match the morphism source")
    if f.target_size == 0:
        return ()
    if not x:
        if ring is None:
            raise GradeMismatch("empty source configuration needs an explicit ring")
        return (ring.zero,) * f.target_size
    ring = x[0].ring
    out = [ring.zero] * f.target_size
    for r, e in enumerate(x):
        s = f(r)
        out[s] = out[s] + e
    return tuple(out)


def ef_transpose(f: OrdinalMorphism, y: Configuration) -> Configuration:
    """Transpose of ef under the trace pairing: entry r is y at f(r)."""
    if len(y) != f.target_size:
        raise GradeMismatch("configuration grade does not match the morphism target")
    return tuple(y[f(r)] for r in range(f.source_size))


# -- flat states ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FlatState:
    """Exact state with amplitude q^(norm_exp/2) * omega^(phase) per basis ket.

    The phase table has one entry in [0, p^r) per configuration, indexed
    in the canonical mixed-radix order.  Normalized states have
    norm_exp = -l.
    """

    ring: GaloisRing
    l: int
    basis: str
    norm_exp: int
    phases: tuple[int, ...]

    def __post_init__(self):
        if self.basis not in (COMPUTATIONAL, HADAMARD):
            raise BasisMismatch(f"unknown basis tag {self.basis!r}")
        if len(self.phases) != self.ring.q ** self.l:
            raise GradeMismatch("phase table size does not match the grade")

    @staticmethod
    def from_table(ring: GaloisRing, l: int, phases, basis: str = COMPUTATIONAL,
                   norm_exp: int | None = None) -> "FlatState":
        table = tuple(int(v) % ring.char for v in phases)
        return FlatState(ring, l, basis, -l if norm_exp is None else norm_exp, table)

    @staticmethod
    def zero_ket(ring: GaloisRing, l: int) -> "FlatState":
        """The zero-configuration Hadamard ket: uniform phases over the
        computational table, the seed the hypergraph operator acts on."""
        return FlatState(ring, l, COMPUTATIONAL, -l, (0,) * ring.q ** l)

    def phase_at(self, x: Configuration) -> int:
        return self.phases[config_index(self.ring, x)]

    def with_phases(self, phases, norm_exp: int | None = None) -> "FlatState":
        return FlatState(self.ring, self.l, self.basis,
                         self.norm_exp if norm_exp is None else norm_exp,
                         tuple(int(v) % self.ring.char for v in phases))

    def add_constant(self, c: int) -> "FlatState":
        m = self.ring.char
        return self.with_phases((v + c) % m for v in self.phases)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FlatState)
            and self.ring.key == other.ring.key
            and (self.l, self.basis, self.norm_exp, self.phases)
            == (other.l, other.basis, other.norm_exp, other.phases)
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.l, self.basis, self.norm_exp, self.phases))


def _check_compatible(a: Configuration, psi: FlatState) -> None:
    if len(a) != psi.l:
        raise GradeMismatch("operator grade does not match the state grade")
    for e in a:
        if e.ring.key != psi.ring.key:
            raise RingMismatch("operator configuration over a different ring")


def _pairing_table(psi: FlatState, a: Configuration) -> list[int]:
    ring = psi.ring
    return [trace_pairing(a, x) for x in all_configurations(ring, psi.l)]


def _translate_table(psi: FlatState, a: Configuration) -> list[int]:
    """Table t with t[x] = old phase at x + a."""
    ring = psi.ring
    out = []
    for x in all_configurations(ring, psi.l):
        out.append(psi.phases[config_index(ring, config_add(x, a))])
    return out


def apply_pauli_z(a: Configuration, psi: FlatState) -> FlatState:
    """Pauli Z(a): ket-translation in the Hadamard basis, diagonal in the computational one."""
    _check_compatible(a, psi)
    ring = psi.ring
    if psi.basis == COMPUTATIONAL:
        pair = _pairing_table(psi, a)
        return psi.with_phases(
            (v + t) % ring.char for v, t in zip(psi.phases, pair))
    # Hadamard: amplitude at x + a is the old amplitude at x
    minus_a = tuple(-e for e in a)
    return psi.with_phases(_translate_table(psi, minus_a))


def apply_pauli_x(a: Configuration, psi: FlatState) -> FlatState:
    """Pauli X(a): diagonal in the Hadamard basis, ket-translation in the computational one."""
    _check_compatible(a, psi)
    ring = psi.ring
    if psi.basis == HADAMARD:
        pair = _pairing_table(psi, a)
        return psi.with_phases(
            (v + t) % ring.char for v, t in zip(psi.phases, pair))
    # computational: X(a) maps the ket of x to the ket of x - a,
    # so the new table value at x is the old value at x + a
    return psi.with_phases(_translate_table(psi, a))


def apply_he_morphism(f: OrdinalMorphism, psi: FlatState) -> FlatState:
    """Hilbert-space action of an ordinal function on a computational flat state.

    New phase at y is the old phase at the transposed configuration of y;
    the magnitude exponent grows by (l - m).
    """
    if psi.basis != COMPUTATIONAL:
        raise WrongBasis("morphism action implemented on computational-basis tables")
    if f.source_size != psi.l:
        raise GradeMismatch("morphism source does not match the state grade")
    ring = psi.ring
    phases = []
    for y in all_configurations(ring, f.target_size):
        phases.append(psi.phase_at(ef_transpose(f, y)))
    return FlatState(ring, f.target_size, COMPUTATIONAL,
                     psi.norm_exp + (psi.l - f.target_size), tuple(phases))


def tensor(psi: FlatState, phi: FlatState) -> FlatState:
    """Monadic product of states: phases add blockwise, magnitudes multiply."""
    if psi.ring.key != phi.ring.key:
        raise RingMismatch("tensor of states over different rings")
    if psi.basis != phi.basis:
        raise BasisMismatch("tensor of states in different bases")
    m = psi.ring.char
    qm = psi.ring.q ** phi.l
    phases = [0] * (len(psi.phases) * len(phi.phases))
    for i, v in enumerate(psi.phases):
        base = i * qm
        for j, w in enumerate(phi.phases):
            phases[base + j] = (v + w) % m
    return FlatState(psi.ring, psi.l + phi.l, psi.basis,
                     psi.norm_exp + phi.norm_exp, tuple(phases))


# -- exact inner products ----------------------------------------------------------

def phase_difference_counts(psi: FlatState, phi: FlatState) -> list[int]:
    """Counts of each residue of (phi - psi) phases; encodes <psi|phi> / q^((n1+n2)/2)."""
    if psi.ring.key != phi.ring.key:
        raise RingMismatch("inner product across rings")
    if psi.l != phi.l:
        raise GradeMismatch("inner product across grades")
    if psi.basis != phi.basis:
        raise BasisMismatch("inner product across bases")
    counts = [0] * psi.ring.char
    for a, b in zip(psi.phases, phi.phases):
        counts[(b - a) % psi.ring.char] += 1
    return counts


def cyclotomic_residue(counts: list[int], p: int, r: int) -> tuple[int, ...]:
    """Remainder of sum_j counts[j] X^j modulo the p^r-th cyclotomic polynomial.

    The sum of roots of unity sum_j counts[j] omega^j vanishes exactly
    when this remainder is the zero vector.
    """
    # Phi_{p^r}(X) = sum_{i<p} X^(i p^(r-1)), monic of degree (p-1) p^(r-1)
    step = p ** (r - 1)
    deg = (p - 1) * step
    work = list(counts) + [0] * max(0, deg + 1 - len(counts))
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            for i in range(p):
                work[k - deg + i * step] -= c
    return tuple(work[:deg])


def sum_of_phases_is_zero(counts: list[int], p: int, r: int) -> bool:
    return not any(cyclotomic_residue(counts, p, r))


def is_orthogonal(psi: FlatState, phi: FlatState) -> bool:
    """Exact vanishing of the inner product of two flat states."""
    counts = phase_difference_counts(psi, phi)
    return sum_of_phases_is_zero(counts, psi.ring.p, psi.ring.r)


def equal_up_to_phase(psi: FlatState, phi: FlatState) -> int | None:
    """The constant c with phi = omega^c psi, or None."""
    if (psi.ring.key, psi.l, psi.basis, psi.norm_exp) != (
            phi.ring.key, phi.l, phi.basis, phi.norm_exp):
        return None
    m = psi.ring.char
    c = (phi.phases[0] - psi.phases[0]) % m
    for a, b in zip(psi.phases, phi.phases):
        if (b - a) % m != c:
            return None
    return c


# -- dense cross-check representation -----------------------------------------------

@dataclass
class DenseState:
    """Complex amplitudes in computational-basis order; float cross-checks only."""

    ring: GaloisRing
    l: int
    amplitudes: np.ndarray


def _omega(ring: GaloisRing) -> complex:
    return np.exp(2j * np.pi / ring.char)


def to_dense(psi: FlatState) -> DenseState:
    """Expand to complex amplitudes in the computational basis."""
    ring = psi.ring
    dim = ring.q ** psi.l
    if dim > dense_cap():
        raise TooLarge(f"dense expansion of dimension {dim} exceeds the cap")
    mag = float(ring.q) ** (psi.norm_exp / 2.0)
    if psi.basis == COMPUTATIONAL:
        amps = mag * np.exp(2j * np.pi * np.array(psi.phases) / ring.char)
        return DenseState(ring, psi.l, amps)
    # Hadamard kets expanded over computational ones
    w = _omega(ring)
    configs = list(all_configurations(ring, psi.l))
    amps = np.zeros(dim, dtype=complex)
    scale = mag * float(ring.q) ** (-psi.l / 2.0)
    for j, x in enumerate(configs):
        coef = scale * w ** psi.phases[j]
        for i, y in enumerate(configs):
            amps[i] += coef * w ** trace_pairing(y, x)
    return DenseState(ring, psi.l, amps)


def fourier_matrix(ring: GaloisRing, l: int) -> np.ndarray:
    """The grade-l Fourier matrix with entries q^(-l/2) omega^(<x,y>)."""
    dim = ring.q ** l
    if dim > dense_cap():
        raise TooLarge(f"Fourier matrix of dimension {dim} exceeds the cap")
    w = _omega(ring)
    configs = list(all_configurations(ring, l))
    mat = np.empty((dim, dim), dtype=complex)
    for i, x in enumerate(configs):
        for j, y in enumerate(configs):
            mat[i, j] = w ** trace_pairing(x, y)
    return mat * float(ring.q) ** (-l / 2.0)


def fourier(psi: DenseState, direction: str = "forward") -> DenseState:
    """Apply the Fourier operator (or its adjoint) to a dense state."""
    mat = fourier_matrix(psi.ring, psi.l)
    if direction == "forward":
        out = mat @ psi.amplitudes
    elif direction == "inverse":
        out = mat.conj().T @ psi.amplitudes
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return DenseState(psi.ring, psi.l, out)


# -- emission format ------------------------------------------------------------

def render_element(e: RingElement) -> str:
    if e.ring.d == 1:
        return str(e.coeffs[0])
    return ":".join(str(c) for c in e.coeffs)


def render_configuration(x: Configuration) -> str:
    if not x:
        return "()"
    return ",".join(render_element(e) for e in x)


def emit_state(psi: FlatState, dense: bool = False) -> str:
    """The line-oriented exact state format (optionally with complex columns)."""
    lines = [
        f"# basis {psi.basis}",
        f"# l {psi.l}",
        f"# norm_exp {psi.norm_exp}",
        f"# char {psi.ring.char}",
    ]
    amps = to_dense(psi).amplitudes if dense else None
    for i, x in enumerate(all_configurations(psi.ring, psi.l)):
        row = f"{render_configuration(x)}  {psi.phases[i]}"
        if amps is not None:
            re = 0.0 if abs(amps[i].real) < 1e-12 else amps[i].real
            im = 0.0 if abs(amps[i].imag) < 1e-12 else amps[i].imag
            row += f"  {re:.12g},{im:.12g}"
        lines.append(row)
    return "\n".join(lines) + "\n"
