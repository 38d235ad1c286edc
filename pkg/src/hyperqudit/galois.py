"""Exact arithmetic in Galois rings GR(p^r, d).

A Galois ring of characteristic p^r and degree d is the quotient
Z_{p^r}[x] / (h(x)) for a monic degree-d polynomial h whose mod-p
reduction is irreducible over F_p.  Elements are reduced coefficient
vectors in the basis 1, theta, ..., theta^(d-1), theta being the class
of x.  Values of the prime subring (traces, phase exponents) are plain
integers reduced mod p^r.  Everything here is exact integer arithmetic;
nothing is floated.

The canonical element order is 0, 1, then the remaining elements in
lexicographic order of their coefficient vectors (constant term first).
All serialized exponent tuples and matrices in this package refer to
that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BadCoefficient,
    NoPrimitiveElement,
    NonMonic,
    OutOfRange,
    ReducibleModulus,
    RingMismatch,
)

__all__ = [
    "GaloisRing",
    "RingElement",
    "make_ring",
    "ring_from_descriptor",
    "ring_to_descriptor",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# -- mod-p polynomial helpers (for the irreducibility check) -----------------

def _poly_mod_trim(coeffs: list[int], p: int) -> list[int]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mod_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division over F_p; den must be nonzero."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - dd, 0)
    for k in range(len(num) - dd - 1, -1, -1):
        c = (num[k + dd] * inv_lead) % p
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] = (num[k + j] - c * dj) % p
    return _poly_mod_trim(quot, p), _poly_mod_trim(num, p)


def _irreducible_mod_p(coeffs: list[int], p: int) -> bool:
    """Exhaustive trial division by all monic factors of degree <= d/2."""
    red = [c % p for c in coeffs]
    d = len(red) - 1
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            trial = list(tail) + [1]
            _, rem = _poly_mod_divmod(red, trial, p)
            if not rem:
                return False
    return True


@dataclass(frozen=True, eq=False)
class RingElement:
    """An element of a :class:`GaloisRing`, stored as a reduced coefficient vector."""

    ring: "GaloisRing"
    coeffs: tuple[int, ...]

    def _check(self, other: "RingElement") -> None:
        if self.ring.key != other.ring.key:
            raise RingMismatch(f"elements of {self.ring} and {other.ring} combined")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        m = self.ring.char
        return RingElement(self.ring, tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        m = self.ring.char
        return RingElement(self.ring, tuple((-a) % m for a in self.coeffs))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return self.ring._mul(self, other)

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            raise OutOfRange(f"negative ring power {n}")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, k: int) -> "RingElement":
        """Multiply by an integer scalar (an element of the prime subring)."""
        m = self.ring.char
        return RingElement(self.ring, tuple((k * a) % m for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring.key == other.ring.key
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.coeffs))

    def __repr__(self) -> str:
        return f"RingElement{self.coeffs}"


class GaloisRing:
    """The ring GR(p^r, d) = Z_{p^r}[x]/(h(x)) with cached element tables.

    Instances are immutable after construction apart from idempotent,
    internally populated caches; they are safe to share.
    """

    def __init__(self, p: int, r: int, d: int, modulus: tuple[int, ...],
                 find_primitive: bool | None = None):
        if not _is_prime(p):
            raise BadCoefficient(f"p = {p} is not prime")
        if r < 1 or d < 1:
            raise BadCoefficient(f"r = {r}, d = {d} must be positive")
        char = p ** r
        if len(modulus) != d + 1:
            raise NonMonic(
                f"modulus must have {d + 1} coefficients for degree {d}, got {len(modulus)}")
        if any(not (0 <= c < char) for c in modulus):
            raise BadCoefficient(f"modulus coefficients must lie in [0, {char})")
        if modulus[-1] != 1:
            raise NonMonic("modulus is not monic")
        if not _irreducible_mod_p(list(modulus), p):
            raise ReducibleModulus("mod-p reduction of the modulus factors over F_p")

        self.p = p
        self.r = r
        self.d = d
        self.char = char
        self.q = p ** (r * d)
        self.modulus = tuple(modulus)
        self.key = (p, r, d, self.modulus)

        self.zero = RingElement(self, (0,) * d)
        self.one = RingElement(self, (1,) + (0,) * (d - 1))

        rest = sorted(
            c for c in itertools.product(range(char), repeat=d)
            if c != self.zero.coeffs and c != self.one.coeffs
        )
        self.elements: tuple[RingElement, ...] = (
            self.zero, self.one, *(RingElement(self, c) for c in rest)
        )
        self._index = {e.coeffs: i for i, e in enumerate(self.elements)}

        # theta-power basis (1, theta, ..., theta^(d-1)) used by the trace
        theta_basis = [self.one]
        for j in range(1, d):
            cs = [0] * d
            cs[j] = 1
            theta_basis.append(RingElement(self, tuple(cs)))
        self._theta_basis = tuple(theta_basis)

        # caches populated lazily; population is idempotent
        self._cyc_cache: dict[tuple[int, ...], tuple[int, int]] = {}
        self._pow_cache: dict[tuple[int, ...], tuple[RingElement, ...]] = {}
        self._digit_cache: dict[tuple[int, ...], tuple[RingElement, ...]] = {}

        self.primitive_theta: RingElement | None = None
        if find_primitive is None:
            find_primitive = (r == 1)
        if find_primitive:
            self.primitive_theta = self._find_primitive()

    # -- basics ---------------------------------------------------------------

    def element(self, coeffs) -> RingElement:
        cs = tuple(int(c) % self.char for c in coeffs)
        if len(cs) != self.d:
            raise BadCoefficient(f"expected {self.d} coefficients, got {len(cs)}")
        return RingElement(self, cs)

    def from_int(self, value: int) -> RingElement:
        """Embed an integer via the prime subring."""
        return RingElement(self, (value % self.char,) + (0,) * (self.d - 1))

    def index(self, x: RingElement) -> int:
        return self._index[x.coeffs]

    def _mul(self, a: RingElement, b: RingElement) -> RingElement:
        m = self.char
        d = self.d
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] = (prod[i + j] + ai * bj) % m
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    prod[k - d + j] = (prod[k - d + j] - c * self.modulus[j]) % m
        return RingElement(self, tuple(prod[:d]))

    # -- trace via the multiplication matrix -----------------------------------

    def trace(self, x: RingElement) -> int:
        """tr(x): matrix trace of multiplication-by-x on the free P-module R."""
        if x.ring.key != self.key:
            raise RingMismatch("trace of a foreign element")
        total = 0
        for j, basis_el in enumerate(self._theta_basis):
            total += (x * basis_el).coeffs[j]
        return total % self.char

    # -- unit / nilpotent classification ---------------------------------------

    def is_unit(self, x: RingElement) -> bool:
        """True iff x is invertible, i.e. x mod p is nonzero in the residue field."""
        return any(c % self.p for c in x.coeffs)

    def is_nilpotent(self, x: RingElement) -> bool:
        return not self.is_unit(x)

    def multiplicative_order(self, x: RingElement) -> int | None:
        """Order of x in the unit group, or None for a non-unit."""
        if not self.is_unit(x):
            return None
        n, y = 1, x
        while y != self.one:
            y = y * x
            n += 1
        return n

    def _find_primitive(self) -> RingElement | None:
        target = self.p ** self.d - 1
        for e in self.elements[1:]:
            if self.multiplicative_order(e) == target and self._teichmuller_ok(e):
                return e
        return None

    def _teichmuller_set(self, theta: RingElement) -> list[RingElement]:
        out = [self.zero, self.one]
        y = theta
        for _ in range(self.p ** self.d - 2):
            out.append(y)
            y = y * theta
        return out

    def _teichmuller_ok(self, theta: RingElement) -> bool:
        """{0} U {theta^i} must reduce bijectively onto the residue field."""
        seen = {tuple(c % self.p for c in t.coeffs) for t in self._teichmuller_set(theta)}
        return len(seen) == self.p ** self.d

    # -- p-adic / Teichmueller representation ----------------------------------

    def p_adic_digits(self, x: RingElement) -> tuple[RingElement, ...]:
        """Digits (a_0, ..., a_{r-1}), each in {0} U {theta^i}, with sum a_k p^k = x."""
        if self.primitive_theta is None:
            raise NoPrimitiveElement("ring has no primitive element cached")
        if not self._digit_cache:
            tset = self._teichmuller_set(self.primitive_theta)
            table: dict[tuple[int, ...], tuple[RingElement, ...]] = {}
            for digits in itertools.product(tset, repeat=self.r):
                acc = self.zero
                for alpha, a in enumerate(digits):
                    acc = acc + a.scale(self.p ** alpha)
                table.setdefault(acc.coeffs, digits)
            if len(table) != self.q:
                raise NoPrimitiveElement("Teichmueller set does not separate the ring")
            self._digit_cache.update(table)
        return self._digit_cache[x.coeffs]

    def frobenius(self, x: RingElement) -> RingElement:
        """phi(x) = sum_k a_k^p p^k over the p-adic digits; order d, fixes P."""
        digits = self.p_adic_digits(x)
        acc = self.zero
        for alpha, a in enumerate(digits):
            acc = acc + (a ** self.p).scale(self.p ** alpha)
        return acc

    def trace_frobenius(self, x: RingElement) -> int:
        """Frobenius-sum trace sum_{i<d} phi^i(x); equals trace(x) for all x."""
        acc = self.zero
        y = x
        for _ in range(self.d):
            acc = acc + y
            y = self.frobenius(y)
        if any(acc.coeffs[1:]):
            raise AssertionError("Frobenius-sum trace left the prime subring")
        return acc.coeffs[0]

    def __repr__(self) -> str:
        return f"GR({self.char},{self.d})"


def make_ring(p: int, r: int, d: int, modulus, find_primitive: bool | None = None) -> GaloisRing:
    """Construct and validate GR(p^r, d) with the given monic modulus.

    The modulus is given least-significant coefficient first and must have
    d + 1 coefficients in [0, p^r).  A primitive element (multiplicative
    order p^d - 1, generating a valid Teichmueller digit set) is searched
    for exhaustively when r = 1 or when `find_primitive` is set.
    """
    return GaloisRing(p, r, d, tuple(int(c) for c in modulus), find_primitive=find_primitive)


# -- descriptor (de)serialization ---------------------------------------------

def ring_to_descriptor(ring: GaloisRing) -> dict:
    return {"p": ring.p, "r": ring.r, "d": ring.d, "modulus": list(ring.modulus)}


def ring_from_descriptor(desc: dict) -> GaloisRing:
    if "name" in desc:
        from .catalog import named_ring

        return named_ring(desc["name"])
    try:
        p, r, d = int(desc["p"]), int(desc["r"]), int(desc["d"])
        modulus = [int(c) for c in desc["modulus"]]
    except (KeyError, TypeError) as exc:
        raise BadCoefficient(f"malformed ring descriptor: {desc!r}") from exc
    find = desc.get("find_primitive")
    return make_ring(p, r, d, modulus, find_primitive=find)
