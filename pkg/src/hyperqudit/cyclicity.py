"""Cyclic monoids of ring elements and the cyclicity monoid of a ring.

For x in a finite ring the powers x^0, x^1, ... are eventually periodic:
there are a smallest index iota >= 0 and period pi >= 1 such that the
first iota + pi powers are pairwise distinct and x^(iota+pi) = x^iota.
The set [iota + pi] with the induced addition is the cyclic monoid of x.

The cyclicity monoid of the whole ring is the direct sum of these over
all elements.  Its members ("generalized exponents") are sparse tuples
u = (u_x); the power x^u means x raised to u's own x-component, so the
integer exponent applied depends on the base.  Conventionally 0^0 = 1,
which is forced by the cyclic monoid of 0 having the two distinct
powers 0^0 = 1 and 0^1 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import OutOfRange, RingMismatch
from .galois import GaloisRing, RingElement

__all__ = [
    "CycExponent",
    "SpecialExponents",
    "index_period",
    "reduce_exponent",
    "monoid_add",
    "exp_add",
    "power",
    "embed",
    "special_exponents",
]


def index_period(x: RingElement) -> tuple[int, int]:
    """Smallest (iota, pi) with x^0..x^(iota+pi-1) distinct and x^(iota+pi) = x^iota.

    Found by direct power enumeration (at most q steps) and cached per element.
    """
    ring = x.ring
    cached = ring._cyc_cache.get(x.coeffs)
    if cached is not None:
        return cached
    powers: list[RingElement] = []
    seen: dict[tuple[int, ...], int] = {}
    y = ring.one
    while y.coeffs not in seen:
        seen[y.coeffs] = len(powers)
        powers.append(y)
        y = y * x
    iota = seen[y.coeffs]
    pi = len(powers) - iota
    ring._cyc_cache[x.coeffs] = (iota, pi)
    ring._pow_cache[x.coeffs] = tuple(powers)
    return iota, pi


def _power_table(x: RingElement) -> tuple[RingElement, ...]:
    index_period(x)
    return x.ring._pow_cache[x.coeffs]


def reduce_exponent(x: RingElement, u: int) -> int:
    """The unique representative below iota + pi with x^u = x^(result)."""
    iota, pi = index_period(x)
    if u < iota + pi:
        return u
    return iota + (u - iota) % pi


def monoid_add(x: RingElement, u: int, v: int) -> int:
    """Addition in the cyclic monoid of x: the representative of u + v."""
    iota, pi = index_period(x)
    if not (0 <= u < iota + pi and 0 <= v < iota + pi):
        raise OutOfRange(f"{u}, {v} not both in the cyclic monoid of {x}")
    return reduce_exponent(x, u + v)


def embed(x: RingElement, q_exp: int, u: int) -> int:
    """Monomorphism from the cyclic monoid of x^q_exp into that of x: u -> h_x(q_exp*u)."""
    iota_q, pi_q = index_period(x ** q_exp)
    if not 0 <= u < iota_q + pi_q:
        raise OutOfRange(f"{u} not in the cyclic monoid of x^{q_exp}")
    return reduce_exponent(x, q_exp * u)


@dataclass(frozen=True, eq=False)
class CycExponent:
    """A generalized exponent: sparse tuple over the ring, keyed by element index.

    Stored components are positive and below iota + pi of their element;
    absent components are zero.
    """

    ring: GaloisRing
    items: tuple[tuple[int, int], ...]  # (element index, component), sorted

    @staticmethod
    def make(ring: GaloisRing, components: dict[int, int] | Iterable[tuple[int, int]]) -> "CycExponent":
        pairs = dict(components) if not isinstance(components, dict) else components
        cleaned = []
        for idx, u in sorted(pairs.items()):
            u = int(u)
            if u == 0:
                continue
            if not 0 <= idx < ring.q:
                raise OutOfRange(f"element index {idx} out of range")
            iota, pi = index_period(ring.elements[idx])
            if not u < iota + pi:
                raise OutOfRange(f"component {u} at index {idx} exceeds iota+pi = {iota + pi}")
            cleaned.append((idx, u))
        return CycExponent(ring, tuple(cleaned))

    @staticmethod
    def zero(ring: GaloisRing) -> "CycExponent":
        return CycExponent(ring, ())

    @staticmethod
    def from_dense(ring: GaloisRing, dense: Iterable[int]) -> "CycExponent":
        dense = list(dense)
        if len(dense) != ring.q:
            raise OutOfRange(f"dense exponent tuple must have {ring.q} entries")
        return CycExponent.make(ring, {i: u for i, u in enumerate(dense) if u})

    def to_dense(self) -> tuple[int, ...]:
        dense = [0] * self.ring.q
        for idx, u in self.items:
            dense[idx] = u
        return tuple(dense)

    def component(self, idx: int) -> int:
        for i, u in self.items:
            if i == idx:
                return u
        return 0

    def is_zero(self) -> bool:
        return not self.items

    def __add__(self, other: "CycExponent") -> "CycExponent":
        return exp_add(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CycExponent)
            and self.ring.key == other.ring.key
            and self.items == other.items
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.items))

    def __repr__(self) -> str:
        return f"CycExponent{self.to_dense()}"


def exp_add(u: CycExponent, v: CycExponent) -> CycExponent:
    """Componentwise cyclic-monoid addition in the cyclicity monoid."""
    if u.ring.key != v.ring.key:
        raise RingMismatch("exponents over different rings")
    ring = u.ring
    out: dict[int, int] = {}
    keys = {i for i, _ in u.items} | {i for i, _ in v.items}
    for idx in keys:
        s = monoid_add(ring.elements[idx], u.component(idx), v.component(idx))
        if s:
            out[idx] = s
    return CycExponent.make(ring, out)


def power(x: RingElement, u: CycExponent) -> RingElement:
    """x^u = x^(u_x): the exponent applied is u's component at x itself."""
    if x.ring.key != u.ring.key:
        raise RingMismatch("power of a foreign exponent")
    ux = u.component(x.ring.index(x))
    table = _power_table(x)
    return table[ux] if ux < len(table) else x ** ux


class SpecialExponents(NamedTuple):
    """Distinguished exponents: the generators s(y), their sum, and delta."""

    s: tuple[CycExponent, ...]  # indexed by canonical element index
    s_star: CycExponent         # sum of all s(y); x^s_star = x
    q_elem: CycExponent         # component 1 - delta_{x,1}; x^q_elem = x
    delta: int                  # max over x of iota_x + pi_x


def special_exponents(ring: GaloisRing) -> SpecialExponents:
    """The generating exponents s(y), the identity-acting exponents, and delta."""
    one_idx = ring.index(ring.one)
    gens = []
    for idx in range(ring.q):
        gens.append(CycExponent.make(ring, {} if idx == one_idx else {idx: 1}))
    s = tuple(gens)
    s_star = CycExponent.zero(ring)
    for g in s:
        s_star = exp_add(s_star, g)
    q_elem = CycExponent.make(
        ring, {idx: 1 for idx in range(ring.q) if idx != one_idx})
    delta = max(sum(index_period(x)) for x in ring.elements)
    return SpecialExponents(s, s_star, q_elem, delta)
