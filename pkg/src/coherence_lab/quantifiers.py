"""Coherence quantifiers and the pure-state guard.

Three quantifiers, all normalized to [0, 1]:

* ``c_pdd``: one minus the normalized sum of absolute differences between
  principal-diagonal entries. Defined for pure states only.
* ``c_l1_normalized``: sum of off-diagonal moduli divided by ``N - 1``.
* ``c_re_normalized``: ``S(diag(rho)) - S(rho)`` in bits, divided by ``log2 N``.

The batch helpers prefixed with an underscore operate on stacks of raw arrays
and skip construction checks; they back the trajectory recorder.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import (
    DensityMatrix,
    _eigvalsh,
    as_density,
    diagonal,
    purity,
    shannon_entropy,
    von_neumann_entropy,
    EIG_CLAMP_TOL,
)
from .errors import IndexOutOfRange, InvalidState, NotPureState

PURITY_TOL = 1e-9


class Quantifier(enum.Enum):
    PDD = "c_pdd"
    L1 = "c_l1"
    RE = "c_re"


@dataclass(frozen=True)
class CoherenceValue:
    value: float
    quantifier: Quantifier
    dim: int

    def __float__(self):
        return self.value


def _clip_unit(v):
    # rounding can leave values a few ulps outside [0, 1]
    return min(max(float(v), 0.0), 1.0)


def assert_pure(rho, tol=PURITY_TOL):
    """Raise :class:`NotPureState` unless ``purity(rho) >= 1 - tol``."""
    p = purity(rho)
    if p < 1.0 - tol:
        raise NotPureState(p, tol)


def pairwise_diagonal_sum(rho):
    """``sum_{i != j} |rho_ii - rho_jj|`` over ordered pairs, with no purity check.

    Lies in ``[0, 2(N-1)]`` for any valid density matrix.
    """
    return float(kernels.pdd_pair_sums(diagonal(rho))[0])


def distance_to_max(rho):
    """Normalized distance of a pure state from the maximally coherent states."""
    rho = as_density(rho)
    assert_pure(rho)
    return _clip_unit(pairwise_diagonal_sum(rho) / (2.0 * (rho.dim - 1)))


def c_pdd(rho):
    rho = as_density(rho)
    return CoherenceValue(1.0 - distance_to_max(rho), Quantifier.PDD, rho.dim)


def c_l1_normalized(rho):
    rho = as_density(rho)
    m = rho.entries
    off = np.sum(np.abs(m)) - np.sum(np.abs(np.diagonal(m)))
    return CoherenceValue(_clip_unit(off / (rho.dim - 1)), Quantifier.L1, rho.dim)


def c_re_normalized(rho):
    rho = as_density(rho)
    gap = shannon_entropy(diagonal(rho)) - von_neumann_entropy(rho)
    return CoherenceValue(_clip_unit(gap / np.log2(rho.dim)), Quantifier.RE, rho.dim)


def quantify(rho):
    """All three quantifiers plus the distance, as a dict keyed by short name."""
    rho = as_density(rho)
    d = distance_to_max(rho)
    return {
        "c_pdd": 1.0 - d,
        "distance_to_max": d,
        "c_l1": c_l1_normalized(rho).value,
        "c_re": c_re_normalized(rho).value,
    }


@dataclass(frozen=True)
class MixtureSpec:
    """Two pure states given in polar form, mixed with probabilities p1, p2."""

    p1: float
    p2: float
    amps1: tuple
    amps2: tuple
    phases1: tuple
    phases2: tuple

    def __post_init__(self):
        for name in ("amps1", "amps2", "phases1", "phases2"):
            object.__setattr__(self, name, tuple(float(x) for x in getattr(self, name)))
        n = len(self.amps1)
        if n < 2 or any(len(getattr(self, k)) != n for k in ("amps2", "phases1", "phases2")):
            raise InvalidState("mixture components must share one dimension N >= 2")
        if not (0.0 <= self.p1 <= 1.0 and 0.0 <= self.p2 <= 1.0) or abs(self.p1 + self.p2 - 1.0) > 1e-12:
            raise InvalidState(f"mixing probabilities must be in [0,1] and sum to 1: {self.p1}, {self.p2}")
        for amps in (self.amps1, self.amps2):
            if min(amps) < 0:
                raise InvalidState("magnitudes must be non-negative")
            if abs(sum(a * a for a in amps) - 1.0) > 1e-12:
                raise InvalidState("component state is not normalized")

    @property
    def dim(self):
        return len(self.amps1)

    def coefficients(self):
        c1 = np.asarray(self.amps1) * np.exp(1j * np.asarray(self.phases1))
        c2 = np.asarray(self.amps2) * np.exp(1j * np.asarray(self.phases2))
        return c1, c2


def build_two_state_mixture(spec):
    """``p1 |psi1><psi1| + p2 |psi2><psi2|``."""
    c1, c2 = spec.coefficients()
    m = spec.p1 * np.outer(c1, c1.conj()) + spec.p2 * np.outer(c2, c2.conj())
    return DensityMatrix(m)


def mixed_offdiag_magnitude(spec, i, j):
    """Modulus of entry (i, j) of the mixture, from magnitudes and phase differences.

    With ``x = p1 |a1_i||a1_j|`` and ``y = p2 |a2_i||a2_j|`` the modulus is
    ``sqrt(x^2 + y^2 + 2 x y f)`` where ``f = cos(d1 - d2)`` expands as
    ``cos d1 cos d2 + sin d1 sin d2`` and ``d_m`` are the per-component phase
    differences. It therefore depends on the phases, not only on the diagonal.
    """
    n = spec.dim
    if i == j:
        raise IndexOutOfRange("i and j must differ")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) out of range for N={n}")
    x = spec.p1 * spec.amps1[i] * spec.amps1[j]
    y = spec.p2 * spec.amps2[i] * spec.amps2[j]
    d1 = spec.phases1[i] - spec.phases1[j]
    d2 = spec.phases2[i] - spec.phases2[j]
    f = np.cos(d1) * np.cos(d2) + np.sin(d1) * np.sin(d2)
    return float(np.sqrt(max(x * x + y * y + 2.0 * x * y * f, 0.0)))


# -- batch helpers over stacks of raw matrices, shape (M, N, N) -------------


def _batch_populations(rhos):
    return np.real(np.diagonal(rhos, axis1=1, axis2=2)).copy()


def _batch_purity(rhos):
    return np.sum(np.abs(rhos) ** 2, axis=(1, 2))


def _batch_c_pdd(pops):
    n = pops.shape[1]
    return np.clip(1.0 - kernels.pdd_pair_sums(pops) / (2.0 * (n - 1)), 0.0, 1.0)


def _batch_c_l1(rhos):
    n = rhos.shape[1]
    absm = np.abs(rhos)
    off = absm.sum(axis=(1, 2)) - np.trace(absm, axis1=1, axis2=2)
    return np.clip(off / (n - 1), 0.0, 1.0)


def _entropy_rows(p):
    p = np.where((p < 0) & (p >= -EIG_CLAMP_TOL), 0.0, p)
    safe = np.where(p > 0, p, 1.0)
    return np.maximum(-np.sum(np.where(p > 0, p * np.log2(safe), 0.0), axis=1), 0.0)


def _batch_c_re(rhos, pops):
    n = rhos.shape[1]
    lam = _eigvalsh(rhos)
    gap = _entropy_rows(pops) - _entropy_rows(lam)
    return np.clip(gap / np.log2(n), 0.0, 1.0)
