"""Cyclic monoids and base-dependent exponents.

The powers of a ring element are eventually periodic, described by an
index (pre-period) and a period.  Collecting one cyclic monoid per
element gives the ring's cyclicity monoid, whose members act as
generalized exponents: the integer power applied depends on the base.
"""

from hyperqudit import (
    CycExponent,
    exp_add,
    index_period,
    monoid_add,
    named_ring,
    power,
    reduce_exponent,
    special_exponents,
)
from hyperqudit.states import render_element


def main():
    z4 = named_ring("Z4")
    print("== integers mod 4 ==")
    for e in z4.elements:
        iota, pi = index_period(e)
        print(f"  element {render_element(e)}: index {iota}, period {pi}")
    two = z4.from_int(2)
    print("2^5 reduces to exponent", reduce_exponent(two, 5), "since 2^5 = 0 = 2^2")
    print("1 + 1 in the cyclic monoid of 2 is", monoid_add(two, 1, 1))

    gr42 = named_ring("GR(4,2)")
    print("\n== GR(4,2): the unit 1+theta has a six-cycle ==")
    print("index/period of 1+theta:", index_period(gr42.element([1, 1])))

    f3 = named_ring("F3")
    print("\n== generalized exponents over the three-element field ==")
    print("dense tuples are indexed by the element order 0, 1, 2")
    u = CycExponent.from_dense(f3, (0, 0, 1))
    v = CycExponent.from_dense(f3, (1, 0, 1))
    for name, exponent in [("(0,0,1)", u), ("(1,0,1)", v)]:
        values = [render_element(power(x, exponent)) for x in f3.elements]
        print(f"  x^{name} over (0,1,2) evaluates to {values}")
    print("  exponents add componentwise in each cyclic monoid:",
          exp_add(u, v).to_dense())

    special = special_exponents(f3)
    print("\nthe largest cyclic monoid size (delta) is", special.delta)
    print("the summed generator exponent acts as the identity power:",
          all(power(x, special.s_star) == x for x in f3.elements))


if __name__ == "__main__":
    main()
