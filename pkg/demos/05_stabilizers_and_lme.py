"""Stabilizer structure and local maximal entangleability.

Conjugating phase-type Pauli operators by the hypergraph unitary gives
q^l commuting stabilizers that fix the state; translating the state by
the shift-type Paulis gives the orthonormal hypergraph basis, on which
the stabilizers act with explicit root-of-unity eigenvalues.  The same
translates witness local maximal entangleability.
"""

from hyperqudit import (
    all_configurations,
    basis_state,
    bell_hypergraph,
    build_state,
    equal_up_to_phase,
    is_orthogonal,
    lme_check,
    named_ring,
    qutrit_hypergraph,
    stabilizer_apply,
    trace_pairing,
)


def main():
    f3 = named_ring("F3")
    hg = qutrit_hypergraph("c")
    psi = build_state(hg)

    labels = list(all_configurations(f3, 3))
    fixed = sum(1 for a in labels if stabilizer_apply(hg, a, psi) == psi)
    print(f"stabilizers fixing the state: {fixed}/{len(labels)}")

    print("\neigenvalues on the hypergraph basis (first basis label shown):")
    b = labels[5]
    ket = basis_state(hg, b)
    for a in labels[:6]:
        phase = equal_up_to_phase(ket, stabilizer_apply(hg, a, ket))
        print(f"  stabilizer of {[e.coeffs[0] for e in a]} acts with omega^{phase}"
              f" (pairing predicts {trace_pairing(a, b)})")

    print("\nhypergraph basis orthogonality (exact, integer phase counting):")
    kets = [basis_state(hg, a) for a in labels[:4]]
    for i, s in enumerate(kets):
        row = ["0" if i == j else ("yes" if is_orthogonal(s, t) else "NO")
               for j, t in enumerate(kets)]
        print("  ", row)

    print("\nlocal maximal entangleability:")
    print("  Bell state:", lme_check(bell_hypergraph(0, 0)))
    print("  qutrit state c (reduced density at dimension 729):", lme_check(hg))


if __name__ == "__main__":
    main()
