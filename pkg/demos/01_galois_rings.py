"""Galois rings: construction, exact arithmetic, trace and digits.

A Galois ring GR(p^r, d) is built from a monic degree-d modulus whose
mod-p reduction is irreducible.  This demo walks the three rings used
throughout the gallery and prints the tables that characterize them.
"""

from hyperqudit import make_ring, named_ring
from hyperqudit.states import render_element


def show_ring(ring, title):
    print(f"\n== {title}: {ring} with q = {ring.q} elements ==")
    print("element order:", ", ".join(render_element(e) for e in ring.elements))
    print("trace table:  ", {render_element(e): ring.trace(e) for e in ring.elements})
    units = [render_element(e) for e in ring.elements if ring.is_unit(e)]
    print("units:        ", units)


def main():
    # the field with four elements, from the modulus 1 + x + x^2
    f4 = named_ring("F4")
    show_ring(f4, "the quartic field")
    theta = f4.element([0, 1])
    print("theta * (1 + theta) =", render_element(theta * f4.element([1, 1])),
          " (reciprocally inverse units)")

    # the 16-element ring of characteristic 4 over the same modulus
    gr42 = named_ring("GR(4,2)")
    show_ring(gr42, "the degree-2 ring of characteristic 4")
    print("trace is 2*x0 + 3*x1 here; e.g. trace(1) =", gr42.trace(gr42.one))

    # characteristic-4 integers: nilpotents appear
    z4 = named_ring("Z4")
    show_ring(z4, "integers mod 4")
    two = z4.from_int(2)
    print("2 * 2 =", render_element(two * two), " so 2 is nilpotent:", z4.is_nilpotent(two))

    # every element has a unique digit expansion over the Teichmueller set
    x = gr42.element([3, 1])
    digits = gr42.p_adic_digits(x)
    print("\ndigits of", render_element(x), "in base 2:",
          [render_element(a) for a in digits])
    print("Frobenius of theta:", render_element(gr42.frobenius(gr42.element([0, 1]))))
    print("matrix trace == Frobenius-sum trace on all of GR(4,2):",
          all(gr42.trace(e) == gr42.trace_frobenius(e) for e in gr42.elements))

    # invalid moduli are rejected outright
    try:
        make_ring(2, 1, 2, [1, 0, 1])
    except Exception as exc:
        print("\nreducible modulus rejected:", exc)


if __name__ == "__main__":
    main()
