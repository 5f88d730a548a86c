"""Local-unitary invariants, canonical forms and geometric entanglement of three-fermion states in the
third exterior power of C^6, and of three-qubit states through the single-occupancy embedding."""

from .canonform import CanonicalResult, DSource, canonicalize, qubit_canonicalize, qubit_witness
from .errors import (
    CalibrationFailed,
    DomainError,
    Inconsistent,
    NotInDelta,
    NotInDeltaPrime,
    NotNormalized,
    NotSOV,
    NotUnitary,
    OptimizerFailed,
    ZeroState,
)
from .exterior import ThreeFermionState, ThreeQubitState, W6Point, apply_unitary, sov_inverse, sov_isometry
from .gme import gme, mu_general, mu_sov
from .invariants import (
    FermionInvariants,
    QubitInvariants,
    SloccType,
    fermion_invariants,
    lu_equivalent,
    quasi_real,
    qubit_invariants,
    slocc_type,
    w6_invariants,
)
from .precision import Precision
from .region import in_delta, in_theta, orbit_case

__all__ = [
    "CalibrationFailed", "CanonicalResult", "DSource", "DomainError", "FermionInvariants", "Inconsistent",
    "NotInDelta", "NotInDeltaPrime", "NotNormalized", "NotSOV", "NotUnitary", "OptimizerFailed", "Precision",
    "QubitInvariants", "SloccType", "ThreeFermionState", "ThreeQubitState", "W6Point", "ZeroState",
    "apply_unitary", "canonicalize", "fermion_invariants", "gme", "in_delta", "in_theta", "lu_equivalent",
    "mu_general", "mu_sov", "orbit_case", "quasi_real", "qubit_canonicalize", "qubit_invariants",
    "qubit_witness", "slocc_type", "sov_inverse", "sov_isometry", "w6_invariants",
]
