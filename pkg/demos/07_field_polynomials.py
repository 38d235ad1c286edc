"""Power matrices and interpolation polynomials over small fields.

Over a field every generalized power function is a polynomial of degree
below q.  The coefficients come from the inverse power matrix (closed
block formula via a primitive element); products reduce modulo the
universal polynomial x^q - x; and the generating exponents span a basis
in which any reduced polynomial expands through the basic power matrix.
"""

from hyperqudit import (
    CycExponent,
    basic_power_matrix,
    expand_in_basic,
    m_polynomial,
    named_ring,
    power_matrix,
    power_matrix_inverse,
    reduce_mod_universal,
)
from hyperqudit.states import render_element


def show(mat, title):
    print(title)
    for row in mat:
        print("   " + "  ".join(f"{render_element(e):>4}" for e in row))


def main():
    f3 = named_ring("F3")
    show(power_matrix(f3), "power matrix over the three-element field")
    show(power_matrix_inverse(f3), "its inverse (block formula)")
    c, cinv = basic_power_matrix(f3)
    show(c, "basic power matrix")
    show(cinv, "its inverse (Gaussian elimination)")

    print("\ninterpolation polynomials, coefficient arrays constant-first:")
    for dense in [(1, 0, 0), (0, 0, 1), (1, 0, 1)]:
        poly = m_polynomial(f3, CycExponent.from_dense(f3, dense))
        print(f"   exponent {dense} ->", [c.coeffs[0] for c in poly.coeffs])

    print("\nthe exponent-to-polynomial map is multiplicative mod x^3 - x:")
    m = m_polynomial(f3, CycExponent.from_dense(f3, (1, 0, 0)))
    print("   square of the nil-power polynomial reduces to itself:",
          reduce_mod_universal(m * m) == m)

    f4 = named_ring("F4")
    m10 = m_polynomial(f4, CycExponent.from_dense(f4, (0, 0, 1, 0)))
    m01 = m_polynomial(f4, CycExponent.from_dense(f4, (0, 0, 0, 1)))
    m11 = m_polynomial(f4, CycExponent.from_dense(f4, (0, 0, 1, 1)))
    print("   quartic-field product identity:", reduce_mod_universal(m10 * m01) == m11)

    print("\nexpanding 1 + x + 2x^2 in the generator basis:")
    coeffs = expand_in_basic(m_polynomial(f3, CycExponent.from_dense(f3, (0, 0, 1))))
    print("   coefficients:", [c.coeffs[0] for c in coeffs])


if __name__ == "__main__":
    main()
