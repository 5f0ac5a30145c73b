"""Coherence quantifiers for pure states and two-qubit laser-pulse simulations."""

from .core import (
    DensityMatrix,
    StateVector,
    diagonal,
    kron,
    purity,
    shannon_entropy,
    state_to_density,
    von_neumann_entropy,
)
from .errors import (
    CoherenceLabError,
    DimensionMismatch,
    EigendecompositionFailure,
    HermiticityViolation,
    IndexOutOfRange,
    InvalidState,
    NotPureState,
    PurityDrift,
)
from .kernels import BACKEND
from .majorization import MonotonicityVerdict, check_monotonicity, majorizes
from .quantifiers import (
    CoherenceValue,
    MixtureSpec,
    Quantifier,
    assert_pure,
    build_two_state_mixture,
    c_l1_normalized,
    c_pdd,
    c_re_normalized,
    distance_to_max,
    mixed_offdiag_magnitude,
)

__version__ = "0.1.0"
