"""Hypergraphs over ordinals with calibrations, weightings and markings.

A hypergraph over [l] is a duplicate-free set of nonempty hyperedges
X subset of [l].  A calibration attaches to each hyperedge X a sparse
map from exponent functions (vertex -> generalized exponent, default 0)
to the prime subring; a weighting attaches a single scalar; a marking
attaches a target vertex.  Ordinal functions f: [l] -> [m] act on all
of these through pushforwards, and hypergraphs over [l] and [m] combine
into one over [l+m] by shifting the second block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cyclicity import CycExponent, exp_add
from .errors import (
    BadMark,
    DomainMismatch,
    HyperquditError,
    RingMismatch,
    SizeMismatch,
)
from .galois import GaloisRing, ring_from_descriptor, ring_to_descriptor

__all__ = [
    "Edge",
    "OrdinalMorphism",
    "ExpFunc",
    "CalibratedHypergraph",
    "WeightedHypergraph",
    "MarkedHypergraph",
    "exp_pushforward",
    "calib_pushforward",
    "apply_morphism",
    "monadic_product",
    "hypergraph_to_json",
    "hypergraph_from_json",
]

Edge = tuple[int, ...]  # sorted, nonempty, distinct vertices


def _normalize_edge(vertices: Iterable[int], l: int) -> Edge:
    vs = tuple(sorted(set(int(v) for v in vertices)))
    if not vs:
        raise HyperquditError("hyperedges must be nonempty")
    if vs[0] < 0 or vs[-1] >= l:
        raise HyperquditError(f"edge {vs} out of range for {l} vertices")
    return vs


@dataclass(frozen=True)
class OrdinalMorphism:
    """A function [l] -> [m], stored as the tuple of its values."""

    source_size: int
    target_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source_size:
            raise SizeMismatch("morphism value list does not match its source size")
        if any(not 0 <= v < self.target_size for v in self.values):
            raise SizeMismatch("morphism value out of range")

    def __call__(self, r: int) -> int:
        return self.values[r]

    @staticmethod
    def identity(l: int) -> "OrdinalMorphism":
        return OrdinalMorphism(l, l, tuple(range(l)))

    @staticmethod
    def from_values(values: Iterable[int], target_size: int) -> "OrdinalMorphism":
        vals = tuple(int(v) for v in values)
        return OrdinalMorphism(len(vals), target_size, vals)

    def after(self, other: "OrdinalMorphism") -> "OrdinalMorphism":
        """self o other (apply `other` first)."""
        if other.target_size != self.source_size:
            raise SizeMismatch("morphisms do not compose")
        return OrdinalMorphism(
            other.source_size, self.target_size,
            tuple(self.values[v] for v in other.values))

    def block_sum(self, other: "OrdinalMorphism") -> "OrdinalMorphism":
        """The morphism acting as self on the first block and shifted other on the second."""
        return OrdinalMorphism(
            self.source_size + other.source_size,
            self.target_size + other.target_size,
            self.values + tuple(v + self.target_size for v in other.values))

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.source_size

    def is_bijective(self) -> bool:
        return self.source_size == self.target_size and self.is_injective()

    def image_edge(self, edge: Edge) -> Edge:
        return tuple(sorted({self.values[r] for r in edge}))


@dataclass(frozen=True, eq=False)
class ExpFunc:
    """An exponent function on a hyperedge: vertex -> generalized exponent.

    Canonical form: sorted (vertex, exponent) pairs with zero exponents
    dropped, so structural equality and hashing agree with equality of
    the underlying set functions.
    """

    items: tuple[tuple[int, CycExponent], ...]

    @staticmethod
    def make(assignments: Mapping[int, CycExponent] | Iterable[tuple[int, CycExponent]]) -> "ExpFunc":
        pairs = dict(assignments)
        cleaned = tuple(sorted((int(v), u) for v, u in pairs.items() if not u.is_zero()))
        return ExpFunc(cleaned)

    @staticmethod
    def zero() -> "ExpFunc":
        return ExpFunc(())

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.items)

    def value(self, vertex: int, ring: GaloisRing) -> CycExponent:
        for v, u in self.items:
            if v == vertex:
                return u
        return CycExponent.zero(ring)

    def restrict(self, vertices: Iterable[int]) -> "ExpFunc":
        keep = set(vertices)
        return ExpFunc(tuple((v, u) for v, u in self.items if v in keep))

    def shift(self, offset: int) -> "ExpFunc":
        return ExpFunc(tuple((v + offset, u) for v, u in self.items))

    def relabel(self, mapping: Mapping[int, int]) -> "ExpFunc":
        """Transport along an injective vertex relabelling."""
        return ExpFunc.make({mapping[v]: u for v, u in self.items})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExpFunc) and self.items == other.items

    def __hash__(self) -> int:
        return hash(self.items)

    def sort_key(self) -> tuple:
        return tuple((v, u.to_dense()) for v, u in self.items)

    def __repr__(self) -> str:
        return "ExpFunc(" + ", ".join(f"{v}:{u.to_dense()}" for v, u in self.items) + ")"


def exp_pushforward(f: OrdinalMorphism, edge: Edge, w: ExpFunc, ring: GaloisRing) -> ExpFunc:
    """Push an exponent function on `edge` forward along f.

    The value at an image vertex is the cyclicity-monoid sum of the
    values over its preimages in the edge.
    """
    if any(v not in edge for v in w.support()):
        raise DomainMismatch(f"exponent function {w} not supported on edge {edge}")
    acc: dict[int, CycExponent] = {}
    for r in edge:
        s = f(r)
        u = w.value(r, ring)
        acc[s] = exp_add(acc[s], u) if s in acc else u
    return ExpFunc.make(acc)


class CalibratedHypergraph:
    """A hypergraph over [l] together with a sparse calibration per edge.

    Canonical form: edges sorted, calibration keys canonicalized, zero
    values dropped and all values reduced mod p^r.  Equality is structural.
    """

    def __init__(self, ring: GaloisRing, l: int,
                 calib: Mapping[Edge, Mapping[ExpFunc, int]] | None = None,
                 edges: Iterable[Edge] | None = None):
        if l < 0:
            raise HyperquditError("vertex count must be nonnegative")
        self.ring = ring
        self.l = l
        table: dict[Edge, dict[ExpFunc, int]] = {}
        for e in (edges or ()):
            table[_normalize_edge(e, l)] = {}
        for e, entries in (calib or {}).items():
            edge = _normalize_edge(e, l)
            slot = table.setdefault(edge, {})
            for w, value in entries.items():
                if any(v not in edge for v in w.support()):
                    raise DomainMismatch(f"key {w} not supported on edge {edge}")
                if any(u.ring.key != ring.key for _, u in w.items):
                    raise RingMismatch("exponent over a different ring")
                value = int(value) % ring.char
                if value:
                    slot[w] = (slot.get(w, 0) + value) % ring.char
                    if slot[w] == 0:
                        del slot[w]
        self.calib: dict[Edge, dict[ExpFunc, int]] = {
            e: dict(sorted(vs.items(), key=lambda kv: kv[0].sort_key()))
            for e, vs in sorted(table.items())
        }
        self.edges: tuple[Edge, ...] = tuple(self.calib)

    def canonical(self) -> tuple:
        return (
            self.ring.key, self.l,
            tuple((e, tuple((w.sort_key(), val) for w, val in entries.items()))
                  for e, entries in self.calib.items()),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CalibratedHypergraph) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def stored_entries(self):
        """Iterate (edge, key, value) over all stored nonzero calibration values."""
        for e, entries in self.calib.items():
            for w, val in entries.items():
                yield e, w, val

    def __repr__(self) -> str:
        return f"CalibratedHypergraph(l={self.l}, edges={list(self.edges)})"

    @staticmethod
    def empty(ring: GaloisRing, l: int = 0) -> "CalibratedHypergraph":
        return CalibratedHypergraph(ring, l)


@dataclass(frozen=True, eq=False)
class WeightedHypergraph:
    """A hypergraph with one prime-subring weight per edge."""

    ring: GaloisRing
    l: int
    weights: tuple[tuple[Edge, int], ...]

    @staticmethod
    def make(ring: GaloisRing, l: int, weights: Mapping[Edge, int]) -> "WeightedHypergraph":
        table = {}
        for e, a in weights.items():
            table[_normalize_edge(e, l)] = int(a) % ring.char
        return WeightedHypergraph(ring, l, tuple(sorted(table.items())))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.weights)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedHypergraph)
            and self.ring.key == other.ring.key
            and (self.l, self.weights) == (other.l, other.weights)
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.l, self.weights))


@dataclass(frozen=True, eq=False)
class MarkedHypergraph:
    """A hypergraph whose edges (of size >= 2) each carry a target vertex."""

    ring: GaloisRing
    l: int
    marks: tuple[tuple[Edge, int], ...]

    @staticmethod
    def make(ring: GaloisRing, l: int, marks: Mapping[Edge, int]) -> "MarkedHypergraph":
        table = {}
        for e, t in marks.items():
            edge = _normalize_edge(e, l)
            t = int(t)
            if len(edge) < 2:
                raise BadMark(f"marked edge {edge} must have at least two vertices")
            if t not in edge:
                raise BadMark(f"target {t} not a vertex of {edge}")
            table[edge] = t
        return MarkedHypergraph(ring, l, tuple(sorted(table.items())))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.marks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MarkedHypergraph)
            and self.ring.key == other.ring.key
            and (self.l, self.marks) == (other.l, other.marks)
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.l, self.marks))


# -- morphism action and monadic product ---------------------------------------

def calib_pushforward(f: OrdinalMorphism, hg: CalibratedHypergraph) -> dict[Edge, dict[ExpFunc, int]]:
    """Push the whole calibration forward along f.

    Values of colliding (image edge, pushed key) pairs add mod p^r; only
    keys arising as pushforwards of stored keys appear.
    """
    ring = hg.ring
    out: dict[Edge, dict[ExpFunc, int]] = {}
    for edge in hg.edges:
        out.setdefault(f.image_edge(edge), {})
    for edge, w, val in hg.stored_entries():
        image = f.image_edge(edge)
        key = exp_pushforward(f, edge, w, ring)
        slot = out[image]
        newval = (slot.get(key, 0) + val) % ring.char
        if newval:
            slot[key] = newval
        elif key in slot:
            del slot[key]
    return out


def apply_morphism(f: OrdinalMorphism, hg: CalibratedHypergraph) -> CalibratedHypergraph:
    """The functorial action: image hypergraph with pushed-forward calibration."""
    if f.source_size != hg.l:
        raise SizeMismatch(f"morphism source {f.source_size} != hypergraph grade {hg.l}")
    pushed = calib_pushforward(f, hg)
    return CalibratedHypergraph(hg.ring, f.target_size, pushed, edges=pushed.keys())


def monadic_product(a: CalibratedHypergraph, b: CalibratedHypergraph) -> CalibratedHypergraph:
    """Disjoint union over [l+m]: b's edges and keys shifted by a's grade."""
    if a.ring.key != b.ring.key:
        raise RingMismatch("hypergraphs over different rings")
    calib: dict[Edge, dict[ExpFunc, int]] = {e: dict(vs) for e, vs in a.calib.items()}
    for e, entries in b.calib.items():
        shifted_edge = tuple(v + a.l for v in e)
        calib[shifted_edge] = {w.shift(a.l): val for w, val in entries.items()}
    return CalibratedHypergraph(a.ring, a.l + b.l, calib, edges=calib.keys())


# -- JSON interchange -----------------------------------------------------------

def hypergraph_to_json(hg: CalibratedHypergraph | WeightedHypergraph | MarkedHypergraph) -> dict:
    doc = {"ring": ring_to_descriptor(hg.ring), "l": hg.l, "edges": []}
    if isinstance(hg, CalibratedHypergraph):
        for e, entries in hg.calib.items():
            doc["edges"].append({
                "vertices": list(e),
                "calibration": [
                    {"w": {str(v): list(u.to_dense()) for v, u in w.items}, "value": val}
                    for w, val in entries.items()
                ],
            })
    elif isinstance(hg, WeightedHypergraph):
        for e, a in hg.weights:
            doc["edges"].append({"vertices": list(e), "weight": a})
    else:
        for e, t in hg.marks:
            doc["edges"].append({"vertices": list(e), "target": t})
    return doc


def hypergraph_from_json(doc: dict, kind: str = "calibrated"):
    """Parse a hypergraph document; kind is calibrated, weighted, marked or poly.

    The poly variant returns (hypergraph edges as a dict vertex-tuple ->
    {assignment: value}, ring, l) consumed by the polynomial-phase
    conversion, since a polynomial phase datum is not itself a hypergraph
    type of this module.
    """
    ring = ring_from_descriptor(doc["ring"])
    l = int(doc["l"])
    edges = doc.get("edges", [])
    if kind == "calibrated":
        calib: dict[Edge, dict[ExpFunc, int]] = {}
        plain: list[Edge] = []
        for entry in edges:
            edge = tuple(entry["vertices"])
            plain.append(edge)
            slot: dict[ExpFunc, int] = {}
            for item in entry.get("calibration", []):
                w = ExpFunc.make({
                    int(v): CycExponent.from_dense(ring, dense)
                    for v, dense in item["w"].items()
                })
                slot[w] = (slot.get(w, 0) + int(item["value"])) % ring.char
            calib[edge] = slot
        return CalibratedHypergraph(ring, l, calib, edges=plain)
    if kind == "weighted":
        return WeightedHypergraph.make(
            ring, l, {tuple(e["vertices"]): int(e.get("weight", 0)) for e in edges})
    if kind == "marked":
        return MarkedHypergraph.make(
            ring, l, {tuple(e["vertices"]): int(e["target"]) for e in edges})
    if kind == "poly":
        tau: dict[Edge, dict[tuple[tuple[int, int], ...], int]] = {}
        for entry in edges:
            edge = _normalize_edge(entry["vertices"], l)
            slot = tau.setdefault(edge, {})
            for item in entry.get("poly", []):
                key = tuple(sorted((int(v), int(k)) for v, k in item["a"].items()))
                slot[key] = (slot.get(key, 0) + int(item["value"])) % ring.char
        return ring, l, tau
    raise HyperquditError(f"unknown hypergraph kind {kind!r}")


def all_edges(l: int) -> list[Edge]:
    """All nonempty hyperedges over [l], sorted."""
    out: list[Edge] = []
    for size in range(1, l + 1):
        out.extend(itertools.combinations(range(l), size))
    return sorted(out)
