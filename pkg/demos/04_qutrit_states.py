"""Five entangled three-qutrit states from calibrated hypergraphs.

The family uses the generalized exponents (0,0,1) and (1,0,1) over the
three-element field; raising x to the first gives 1 + x + 2x^2 and to
the second gives x, so the phases are genuinely quadratic polynomials:
these states cannot come from plain edge weightings.
"""

from hyperqudit import (
    QUTRIT_LABELS,
    all_configurations,
    build_state,
    named_ring,
    qutrit_hypergraph,
    tensor,
    monadic_product,
)


def main():
    f3 = named_ring("F3")
    omega = {0: "1", 1: "w", 2: "w2"}

    for lab in QUTRIT_LABELS:
        hg = qutrit_hypergraph(lab)
        psi = build_state(hg)
        print(f"== state {lab}: edges {list(hg.edges)} ==")
        terms = []
        for i, x in enumerate(all_configurations(f3, 3)):
            ket = "".join(str(e.coeffs[0]) for e in x)
            if psi.phases[i]:
                terms.append(f"|{ket}>*{omega[psi.phases[i]]}")
            else:
                terms.append(f"|{ket}>")
        print("  " + " + ".join(terms[:9]))
        print("  + " + " + ".join(terms[9:18]))
        print("  + " + " + ".join(terms[18:]) + "  all over 3^(3/2)")

    print("\n== states compose monadically ==")
    a = qutrit_hypergraph("b")
    b = qutrit_hypergraph("c")
    joint = build_state(monadic_product(a, b))
    split = tensor(build_state(a), build_state(b))
    print("six-qutrit product state equals the tensor of the factors:", joint == split)
    print("phase table size:", len(joint.phases))


if __name__ == "__main__":
    main()
