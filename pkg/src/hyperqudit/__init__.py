"""Exact calibrated hypergraph states of Galois-ring qudits.

The package builds, verifies, canonicalizes and converts hypergraph
states whose qudits are indexed by a Galois ring, entirely in exact
arithmetic; complex numbers appear only in dense cross-checks.
"""

from .galois import GaloisRing, RingElement, make_ring, ring_from_descriptor, ring_to_descriptor
from .cyclicity import (
    CycExponent,
    SpecialExponents,
    embed,
    exp_add,
    index_period,
    monoid_add,
    power,
    reduce_exponent,
    special_exponents,
)
from .hypergraph import (
    CalibratedHypergraph,
    Edge,
    ExpFunc,
    MarkedHypergraph,
    OrdinalMorphism,
    WeightedHypergraph,
    apply_morphism,
    calib_pushforward,
    exp_pushforward,
    hypergraph_from_json,
    hypergraph_to_json,
    monadic_product,
)
from .states import (
    COMPUTATIONAL,
    HADAMARD,
    DenseState,
    FlatState,
    all_configurations,
    apply_he_morphism,
    apply_pauli_x,
    apply_pauli_z,
    config_index,
    ef,
    ef_transpose,
    emit_state,
    equal_up_to_phase,
    fourier,
    fourier_matrix,
    is_orthogonal,
    tensor,
    to_dense,
    trace_pairing,
)
from .hyperstate import (
    apply_d,
    basis_state,
    build_state,
    check_covariance,
    check_stabilizer_pushforward,
    lme_check,
    lme_orthonormal,
    phase_function,
    phase_table,
    stabilizer_apply,
)
from .canonicalize import (
    congruent,
    effectivize,
    is_effective,
    isotropy_group,
    poly_to_calibrated,
    primitive_core,
    qubit_to_weighted,
    support_index,
    weighted_to_calibrated,
)
from .fieldpoly import (
    FieldPolynomial,
    basic_power_matrix,
    expand_in_basic,
    m_polynomial,
    power_matrix,
    power_matrix_inverse,
    reduce_mod_universal,
)
from .marked import cz_phase, default_reference, marked_state, marked_to_calibrated, p_polynomial
from .catalog import (
    QUTRIT_LABELS,
    RING_CATALOG,
    bell_hypergraph,
    named_ring,
    qutrit_hypergraph,
    qutrit_marked,
)

__version__ = "0.1.0"
