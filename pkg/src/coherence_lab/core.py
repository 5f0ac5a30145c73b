"""Dense complex linear algebra for small Hilbert spaces and entropy primitives.

States are stored as plain numpy arrays wrapped in two light value classes,
:class:`StateVector` and :class:`DensityMatrix`, which check their physical
invariants once at construction and are read-only afterwards.
"""

import numpy as np

from .errors import (
    DimensionMismatch,
    EigendecompositionFailure,
    HermiticityViolation,
    InvalidState,
)

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIG_CLAMP_TOL = 1e-10


def _frozen(a):
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


class StateVector:
    """Normalized pure state over the computational basis.

    Parameters
    ----------
    amplitudes : array_like of complex, shape (N,)
        Must satisfy ``sum |a_i|^2 == 1`` within 1e-12 and ``N >= 2``.
    """

    __slots__ = ("amplitudes",)

    def __init__(self, amplitudes):
        a = np.asarray(amplitudes, dtype=np.complex128)
        if a.ndim != 1:
            raise InvalidState(f"amplitudes must be one-dimensional, got shape {a.shape}")
        if a.size < 2:
            raise InvalidState("a state needs at least two basis states (N >= 2)")
        if not np.all(np.isfinite(a)):
            raise InvalidState("amplitudes contain NaN or Inf")
        norm2 = float(np.sum(np.abs(a) ** 2))
        if abs(norm2 - 1.0) > NORM_TOL:
            raise InvalidState(f"state is not normalized: sum |a|^2 = {norm2!r}")
        object.__setattr__(self, "amplitudes", _frozen(a))

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @property
    def dim(self):
        return self.amplitudes.size

    @property
    def populations(self):
        return np.abs(self.amplitudes) ** 2

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)

    def __repr__(self):
        return f"StateVector({np.array2string(self.amplitudes, precision=6)})"

    @classmethod
    def normalized(cls, amplitudes):
        """Build a state from an unnormalized vector; returns ``(state, norm)``."""
        a = np.asarray(amplitudes, dtype=np.complex128)
        norm = float(np.linalg.norm(a))
        if norm == 0.0 or not np.isfinite(norm):
            raise InvalidState("cannot normalize a zero or non-finite vector")
        return cls(a / norm), norm

    @classmethod
    def basis(cls, dim, index=0):
        a = np.zeros(dim, dtype=np.complex128)
        a[index] = 1.0
        return cls(a)

    @classmethod
    def maximally_coherent(cls, dim, phases=None):
        """Equal-weight superposition, optionally with per-component phases."""
        a = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
        if phases is not None:
            a = a * np.exp(1j * np.asarray(phases, dtype=float))
        return cls(a)

    @classmethod
    def from_populations(cls, populations, phases=None):
        p = np.asarray(populations, dtype=float)
        a = np.sqrt(np.clip(p, 0.0, None)).astype(np.complex128)
        if phases is not None:
            a = a * np.exp(1j * np.asarray(phases, dtype=float))
        return cls(a)


class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix.

    ``atol`` relaxes the Hermiticity and trace checks; the eigenvalue floor
    stays at -1e-10.
    """

    __slots__ = ("entries",)

    def __init__(self, entries, atol=HERMITIAN_TOL):
        m = np.asarray(entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidState(f"density matrix must be square, got shape {m.shape}")
        if m.shape[0] < 2:
            raise InvalidState("a density matrix needs N >= 2")
        if not np.all(np.isfinite(m)):
            raise InvalidState("density matrix contains NaN or Inf")
        defect = float(np.max(np.abs(m - m.conj().T)))
        if defect > atol:
            raise HermiticityViolation(f"matrix is not Hermitian (max |rho - rho^H| = {defect:.3g})")
        tr = np.trace(m).real
        if abs(tr - 1.0) > max(atol, TRACE_TOL):
            raise InvalidState(f"trace is {tr!r}, expected 1")
        lam_min = _eigvalsh(m)[0]
        if lam_min < -EIG_CLAMP_TOL:
            raise InvalidState(f"matrix is not positive semidefinite (min eigenvalue {lam_min:.3g})")
        object.__setattr__(self, "entries", _frozen(m))

    def __setattr__(self, name, value):
        raise AttributeError("DensityMatrix is immutable")

    @property
    def dim(self):
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


def as_density(obj):
    """Coerce a StateVector, DensityMatrix or array into a DensityMatrix."""
    if isinstance(obj, DensityMatrix):
        return obj
    if isinstance(obj, StateVector):
        return state_to_density(obj)
    a = np.asarray(obj)
    if a.ndim == 1:
        return state_to_density(StateVector(a))
    return DensityMatrix(a)


def _eigvalsh(m):
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise EigendecompositionFailure(str(exc)) from exc


def state_to_density(psi):
    """Outer product ``|psi><psi|``."""
    if not isinstance(psi, StateVector):
        psi = StateVector(psi)
    a = psi.amplitudes
    return DensityMatrix(np.outer(a, a.conj()))


def diagonal(rho):
    """Populations ``rho_ii`` as a real vector."""
    m = as_density(rho).entries
    d = np.diagonal(m)
    if np.max(np.abs(d.imag)) > HERMITIAN_TOL:
        raise HermiticityViolation("diagonal has a non-negligible imaginary part")
    return d.real.copy()


def purity(rho):
    """``tr(rho^2)``; equal to ``sum |rho_ij|^2`` for Hermitian rho."""
    m = as_density(rho).entries
    return float(np.sum(np.abs(m) ** 2))


def shannon_entropy(p):
    """Shannon entropy in bits with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    nz = p[p > 0]
    return float(max(0.0, -np.sum(nz * np.log2(nz))))


def _spectrum_entropy(lam):
    lam = np.where((lam < 0) & (lam >= -EIG_CLAMP_TOL), 0.0, lam)
    nz = lam[lam > 0]
    return float(max(0.0, -np.sum(nz * np.log2(nz))))


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits; eigenvalues in [-1e-10, 0) are clamped to 0."""
    m = as_density(rho).entries
    return _spectrum_entropy(_eigvalsh(m))


def kron(a, b):
    """Kronecker product of two square matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise DimensionMismatch("kron expects two square matrices")
    return np.kron(a, b)
