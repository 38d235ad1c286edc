"""Finite-field polynomial machinery behind generalized powers.

Over a field with q elements the power function of any generalized
exponent coincides with a unique polynomial of degree below q.  Its
coefficients come from the inverse of the power matrix (the q x q
Vandermonde-type matrix of all powers of all elements), for which a
closed block formula in terms of a primitive element exists.  Products
of such polynomials are reduced modulo the universal polynomial
x^q - x, under which the exponent-to-polynomial map is a monoid
morphism.  The basic power matrix collects the values of the generating
exponents; expanding an arbitrary reduced polynomial in that generator
basis uses its inverse, computed by Gaussian elimination since no
closed form is available.

None of this extends to proper Galois rings; every entry point rejects
r > 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclicity import CycExponent, power, special_exponents
from .errors import DegreeTooHigh, NoPrimitiveElement, NotField, RingMismatch, Singular
from .galois import GaloisRing, RingElement

__all__ = [
    "FieldPolynomial",
    "power_matrix",
    "power_matrix_inverse",
    "gaussian_inverse",
    "m_polynomial",
    "reduce_mod_universal",
    "basic_power_matrix",
    "expand_in_basic",
]

Matrix = tuple[tuple[RingElement, ...], ...]


def _require_field(ring: GaloisRing) -> None:
    if ring.r != 1:
        raise NotField(f"{ring} is not a field (r = {ring.r})")


@dataclass(frozen=True, eq=False)
class FieldPolynomial:
    """A polynomial over a Galois field, least-significant coefficient first."""

    ring: GaloisRing
    coeffs: tuple[RingElement, ...]  # trailing zeros trimmed

    @staticmethod
    def make(ring: GaloisRing, coeffs) -> "FieldPolynomial":
        _require_field(ring)
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, RingElement) or c.ring.key != ring.key:
                raise RingMismatch("coefficient from a different ring")
        while cs and cs[-1].is_zero():
            cs.pop()
        return FieldPolynomial(ring, tuple(cs))

    @staticmethod
    def from_ints(ring: GaloisRing, ints) -> "FieldPolynomial":
        return FieldPolynomial.make(ring, [ring.from_int(v) for v in ints])

    @staticmethod
    def zero(ring: GaloisRing) -> "FieldPolynomial":
        _require_field(ring)
        return FieldPolynomial(ring, ())

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, x: RingElement) -> RingElement:
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.ring.zero
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a + b)
        return FieldPolynomial.make(self.ring, out)

    def __mul__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        if not self.coeffs or not other.coeffs:
            return FieldPolynomial.zero(self.ring)
        zero = self.ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FieldPolynomial.make(self.ring, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldPolynomial)
            and self.ring.key == other.ring.key
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, tuple(c.coeffs for c in self.coeffs)))

    def __repr__(self) -> str:
        return f"FieldPolynomial({[c.coeffs for c in self.coeffs]})"


def power_matrix(ring: GaloisRing) -> Matrix:
    """Entry (x, k) is x^k; rows in canonical element order, columns k in [q]."""
    _require_field(ring)
    rows = []
    for x in ring.elements:
        row = []
        acc = ring.one
        for _ in range(ring.q):
            row.append(acc)
            acc = acc * x
        rows.append(tuple(row))
    return tuple(rows)


def power_matrix_inverse(ring: GaloisRing) -> Matrix:
    """Inverse of the power matrix from the closed block formula.

    The blocks are stated for the element order (0, 1, xi, xi^2, ...)
    with xi primitive; the columns are permuted back to the canonical
    order afterwards.
    """
    _require_field(ring)
    xi = ring.primitive_theta
    if xi is None:
        raise NoPrimitiveElement("inverse power matrix needs a primitive element")
    q = ring.q
    minus_one = -ring.one

    # xi-power order: position of each element in (0, 1, xi, ..., xi^(q-2))
    order = [ring.zero, ring.one]
    acc = xi
    for _ in range(q - 2):
        order.append(acc)
        acc = acc * xi
    pos = {e.coeffs: i for i, e in enumerate(order)}

    block = [[ring.zero] * q for _ in range(q)]
    block[0][0] = ring.one
    for k in range(q - 1):
        block[k + 1][0] = minus_one if k == q - 2 else ring.zero
        for m in range(q - 1):
            block[k + 1][m + 1] = minus_one * xi ** ((q - 2 - k) * m)

    rows = []
    for k in range(q):
        rows.append(tuple(block[k][pos[x.coeffs]] for x in ring.elements))
    return tuple(rows)


def gaussian_inverse(ring: GaloisRing, mat: Matrix) -> Matrix:
    """Matrix inverse over the field by Gauss-Jordan elimination."""
    _require_field(ring)
    n = len(mat)
    work = [list(row) + [ring.one if i == j else ring.zero for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
        if pivot is None:
            raise Singular("matrix is singular over the field")
        work[col], work[pivot] = work[pivot], work[col]
        inv = _field_inverse(ring, work[col][col])
        work[col] = [inv * v for v in work[col]]
        for i in range(n):
            if i != col and not work[i][col].is_zero():
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _field_inverse(ring: GaloisRing, x: RingElement) -> RingElement:
    order = ring.multiplicative_order(x)
    if order is None:
        raise Singular("zero pivot")
    return x ** (order - 1)


def m_polynomial(ring: GaloisRing, u: CycExponent) -> FieldPolynomial:
    """The unique degree < q polynomial agreeing with the power function of u."""
    _require_field(ring)
    if u.ring.key != ring.key:
        raise RingMismatch("exponent over a different ring")
    ainv = power_matrix_inverse(ring)
    coeffs = []
    for k in range(ring.q):
        acc = ring.zero
        for j, x in enumerate(ring.elements):
            acc = acc + ainv[k][j] * power(x, u)
        coeffs.append(acc)
    return FieldPolynomial.make(ring, coeffs)


def reduce_mod_universal(f: FieldPolynomial) -> FieldPolynomial:
    """Remainder modulo x^q - x: the degree < q representative with the same values."""
    ring = f.ring
    q = ring.q
    cs = list(f.coeffs)
    # x^q = x, so fold each high coefficient onto degree k - q + 1
    for k in range(len(cs) - 1, q - 1, -1):
        c = cs[k]
        if not c.is_zero():
            cs[k - q + 1] = cs[k - q + 1] + c
        cs.pop()
    return FieldPolynomial.make(ring, cs)


def basic_power_matrix(ring: GaloisRing) -> tuple[Matrix, Matrix]:
    """Entry (x, y) is x to the generating exponent of y, with its inverse."""
    _require_field(ring)
    special = special_exponents(ring)
    rows = []
    for x in ring.elements:
        rows.append(tuple(power(x, special.s[j]) for j in range(ring.q)))
    c = tuple(rows)
    return c, gaussian_inverse(ring, c)


def expand_in_basic(f: FieldPolynomial) -> tuple[RingElement, ...]:
    """Coefficients of a reduced polynomial in the generator-power basis.

    c_y = sum_k sum_z Cinv[y][z] A[z][k] f_k, so that f agrees pointwise
    with sum_y c_y m_{s(y)}.
    """
    ring = f.ring
    if f.degree() >= ring.q:
        raise DegreeTooHigh(f"degree {f.degree()} polynomial needs reducing first")
    a = power_matrix(ring)
    _, cinv = basic_power_matrix(ring)
    zero = ring.zero
    # values of f at every element, as A . coeffs
    values = []
    for z in range(ring.q):
        acc = zero
        for k, coeff in enumerate(f.coeffs):
            acc = acc + a[z][k] * coeff
        values.append(acc)
    out = []
    for y in range(ring.q):
        acc = zero
        for z in range(ring.q):
            acc = acc + cinv[y][z] * values[z]
        out.append(acc)
    return tuple(out)
