"""Canonical forms of calibrated hypergraphs and conversions between families.

Effectivization regroups every stored calibration entry onto the edge
given by its support, extracting the support-free part as a constant
phase; the result carries no zero calibrations and no off-support keys
and encodes the same state up to a global phase.  The primitive core
strips unused vertices along the unique increasing injection onto the
support.  Congruence (equality up to a vertex permutation) and isotropy
groups are decided by brute force over the symmetric group, which at
desk scale (l <= 6) is exact and fast.

The conversions realize scalar weightings, polynomial phase data and,
over F_2, the converse reduction of calibrations to weightings.
"""

from __future__ import annotations

import itertools
from typing import Mapping

from .cyclicity import CycExponent, reduce_exponent, special_exponents
from .errors import (
    ExponentOutOfRange,
    NotBinaryField,
    NotEffective,
    TooLarge,
)
from .galois import GaloisRing
from .hypergraph import (
    CalibratedHypergraph,
    Edge,
    ExpFunc,
    OrdinalMorphism,
    WeightedHypergraph,
    apply_morphism,
)

__all__ = [
    "is_effective",
    "effectivize",
    "support_index",
    "primitive_core",
    "congruent",
    "isotropy_group",
    "weighted_to_calibrated",
    "poly_to_calibrated",
    "qubit_to_weighted",
]

_CONGRUENCE_MAX_L = 6


def is_effective(hg: CalibratedHypergraph) -> bool:
    """No vanishing edge calibrations and every stored key supported on its whole edge."""
    for edge in hg.edges:
        entries = hg.calib[edge]
        if not entries:
            return False
        for w in entries:
            if w.support() != edge:
                return False
    return True


def effectivize(hg: CalibratedHypergraph) -> tuple[CalibratedHypergraph, int]:
    """Regroup calibration entries by key support; return the effective hypergraph and
    the constant phase split off by the empty-support keys.

    The phase function of the input equals the constant plus that of the
    output, so the states agree up to the global phase of the constant.
    """
    ring = hg.ring
    constant = 0
    grouped: dict[Edge, dict[ExpFunc, int]] = {}
    for edge, w, val in hg.stored_entries():
        supp = w.support()
        if not supp:
            constant = (constant + val * ring.trace(ring.one)) % ring.char
            continue
        slot = grouped.setdefault(supp, {})
        key = w.restrict(supp)
        newval = (slot.get(key, 0) + val) % ring.char
        if newval:
            slot[key] = newval
        else:
            slot.pop(key, None)
    grouped = {e: vs for e, vs in grouped.items() if vs}
    return CalibratedHypergraph(ring, hg.l, grouped, edges=grouped.keys()), constant


def support_index(hg: CalibratedHypergraph) -> tuple[tuple[int, ...], int]:
    """The union of the hyperedges and its cardinality."""
    verts: set[int] = set()
    for e in hg.edges:
        verts.update(e)
    support = tuple(sorted(verts))
    return support, len(support)


def primitive_core(hg: CalibratedHypergraph) -> tuple[OrdinalMorphism, CalibratedHypergraph]:
    """The unique increasing injective chart onto the support and the core over it.

    Applying the chart to the core reproduces the input exactly.
    """
    if not is_effective(hg):
        raise NotEffective("primitive core requires an effective hypergraph")
    support, iota = support_index(hg)
    chart = OrdinalMorphism(iota, hg.l, support)
    back = {v: i for i, v in enumerate(support)}
    calib: dict[Edge, dict[ExpFunc, int]] = {}
    for edge, entries in hg.calib.items():
        core_edge = tuple(sorted(back[v] for v in edge))
        calib[core_edge] = {w.relabel(back): val for w, val in entries.items()}
    core = CalibratedHypergraph(hg.ring, iota, calib, edges=calib.keys())
    return chart, core


def _permutations(l: int):
    for values in itertools.permutations(range(l)):
        yield OrdinalMorphism(l, l, values)


def congruent(a: CalibratedHypergraph, b: CalibratedHypergraph) -> OrdinalMorphism | None:
    """The lexicographically least vertex permutation carrying a to b, if any."""
    if a.l != b.l or a.ring.key != b.ring.key:
        return None
    if a.l > _CONGRUENCE_MAX_L:
        raise TooLarge(f"congruence search capped at l <= {_CONGRUENCE_MAX_L}")
    for f in _permutations(a.l):
        if apply_morphism(f, a) == b:
            return f
    return None


def isotropy_group(hg: CalibratedHypergraph) -> list[OrdinalMorphism]:
    """All vertex permutations fixing the calibrated hypergraph."""
    if hg.l > _CONGRUENCE_MAX_L:
        raise TooLarge(f"isotropy search capped at l <= {_CONGRUENCE_MAX_L}")
    return [f for f in _permutations(hg.l) if apply_morphism(f, hg) == hg]


# -- conversions -----------------------------------------------------------------

def weighted_to_calibrated(whg: WeightedHypergraph) -> CalibratedHypergraph:
    """The calibration with one key per edge sending every vertex to the
    exponent acting as the identity power, valued at the edge weight."""
    ring = whg.ring
    special = special_exponents(ring)
    calib: dict[Edge, dict[ExpFunc, int]] = {}
    plain: list[Edge] = []
    for edge, alpha in whg.weights:
        plain.append(edge)
        if alpha:
            key = ExpFunc.make({r: special.q_elem for r in edge})
            calib[edge] = {key: alpha}
    return CalibratedHypergraph(ring, whg.l, calib, edges=plain)


def _exponent_of_power(ring: GaloisRing, k: int) -> CycExponent:
    """The generalized exponent acting as the k-th power on every element."""
    comps = {}
    for idx, x in enumerate(ring.elements):
        comps[idx] = reduce_exponent(x, k)
    return CycExponent.make(ring, comps)


def poly_to_calibrated(ring: GaloisRing, l: int,
                       tau: Mapping[Edge, Mapping[tuple, int]]) -> CalibratedHypergraph:
    """Realize polynomial phase data as a calibration.

    tau maps each edge to a sparse map from integer-exponent assignments
    (vertex -> natural exponent, given as sorted (vertex, exponent)
    pairs or a dict) to prime-subring values.  Assignments are folded
    onto generalized exponents through per-element power reduction, so
    the phase functions agree pointwise; exponents at or above delta
    fold the same way as their reduced representatives.
    """
    calib: dict[Edge, dict[ExpFunc, int]] = {}
    plain: list[Edge] = []
    for edge, entries in tau.items():
        edge = tuple(sorted(edge))
        plain.append(edge)
        slot = calib.setdefault(edge, {})
        for assignment, val in entries.items():
            pairs = dict(assignment) if not isinstance(assignment, dict) else assignment
            if any(k < 0 for k in pairs.values()):
                raise ExponentOutOfRange("polynomial exponents must be natural numbers")
            if any(v not in edge for v in pairs):
                raise ExponentOutOfRange(f"assignment {pairs} leaves edge {edge}")
            key = ExpFunc.make({
                v: _exponent_of_power(ring, k) for v, k in pairs.items()})
            newval = (slot.get(key, 0) + val) % ring.char
            if newval:
                slot[key] = newval
            else:
                slot.pop(key, None)
    return CalibratedHypergraph(ring, l, calib, edges=plain)


def qubit_to_weighted(hg: CalibratedHypergraph) -> tuple[WeightedHypergraph, int]:
    """Over F_2, collapse a calibration to a weighting plus a sign exponent.

    Every exponent supported on a set acts there as the first power, so
    regrouping by support leaves one key per edge whose value is the
    weight; the input and output phase functions differ by the returned
    constant.
    """
    ring = hg.ring
    if ring.q != 2 or ring.r != 1:
        raise NotBinaryField("qubit collapse requires the binary field")
    effective, constant = effectivize(hg)
    weights: dict[Edge, int] = {}
    for edge, entries in effective.calib.items():
        total = 0
        for w, val in entries.items():
            total = (total + val) % ring.char
        if total:
            weights[edge] = total
    return WeightedHypergraph.make(ring, hg.l, weights), constant
