"""Two-qubit laser-pulse dynamics in the frequency-modulated (rotating) frame.

Each qubit sees ``H_i = [[detuning, rabi/2], [conj(rabi)/2, 0]]`` (hbar = 1,
energies in units of the Rabi frequency). The composite Hamiltonian is either
the Kronecker sum (non-interacting) or the product ``kron(H2, H1)``
(interacting). The density matrix follows ``d(rho)/d(theta) = i [rho, H]``
and is integrated with fixed-step RK4 in the pulse area ``theta``. For a
constant-amplitude pulse with unit Rabi frequency, area and time coincide.

Basis order is ``|00>, |01>, |10>, |11>`` with qubit 1 as the left tensor
factor; basis label ``1`` is the zero-energy level of ``H_i``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import StateVector, kron
from .errors import DimensionMismatch, InvalidState, NotPureState, PurityDrift
from .quantifiers import (
    PURITY_TOL,
    _batch_c_l1,
    _batch_c_pdd,
    _batch_c_re,
    _batch_populations,
    _batch_purity,
)

DRIFT_TOL = 1e-7
DEFAULT_AREA_MAX = 4.0 * math.pi
DEFAULT_STEPS = 4000
INTERACTIONS = ("product", "sum")


@dataclass(frozen=True)
class QubitParams:
    detuning: float = 0.0
    rabi: complex = 1.0

    def __post_init__(self):
        if abs(self.rabi) <= 0:
            raise InvalidState("Rabi frequency must be non-zero")


def ground_state_11():
    return StateVector.basis(4, 3)


@dataclass(frozen=True)
class PulseConfig:
    qubit1: QubitParams = field(default_factory=QubitParams)
    qubit2: QubitParams = field(default_factory=QubitParams)
    interacting: bool = False
    area_max: float = DEFAULT_AREA_MAX
    steps: int = DEFAULT_STEPS
    initial_state: StateVector = field(default_factory=ground_state_11)
    interaction: str = "product"

    def __post_init__(self):
        if not self.area_max > 0:
            raise InvalidState("area_max must be positive")
        if int(self.steps) != self.steps or self.steps < 1:
            raise InvalidState("steps must be a positive integer")
        if self.initial_state.dim != 4:
            raise DimensionMismatch("initial state must be a two-qubit state (dim 4)")
        if self.interaction not in INTERACTIONS:
            raise InvalidState(f"interaction must be one of {INTERACTIONS}")

    @property
    def step_size(self):
        return self.area_max / self.steps


def single_qubit_hamiltonian(q):
    rabi = complex(q.rabi)
    return np.array(
        [[q.detuning, rabi / 2.0], [rabi.conjugate() / 2.0, 0.0]],
        dtype=np.complex128,
    )


def two_qubit_hamiltonian(cfg):
    """Composite 4x4 Hamiltonian.

    Non-interacting: ``H1 (x) I + I (x) H2``. Interacting, ``product``:
    ``kron(H2, H1)`` with unit strength. Interacting, ``sum``: both terms added.
    """
    h1 = single_qubit_hamiltonian(cfg.qubit1)
    h2 = single_qubit_hamiltonian(cfg.qubit2)
    eye = np.eye(2, dtype=np.complex128)
    free = kron(h1, eye) + kron(eye, h2)
    if not cfg.interacting:
        return free
    coupled = kron(h2, h1)
    if cfg.interaction == "sum":
        return free + coupled
    return coupled


def liouville_rhs(rho, H):
    """``i (rho H - H rho)`` with hbar = 1."""
    rho = np.asarray(rho, dtype=np.complex128)
    H = np.asarray(H, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape != H.shape or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatch(f"rho {rho.shape} and H {H.shape} must be equal square shapes")
    return kernels.liouville_rhs(rho, H)


def integrate(rho0, H, area_max, steps):
    """RK4 trajectory of the Liouville equation; array of shape (steps+1, N, N)."""
    rho0 = np.asarray(rho0, dtype=np.complex128)
    H = np.asarray(H, dtype=np.complex128)
    if rho0.shape != H.shape:
        raise DimensionMismatch(f"rho {rho0.shape} and H {H.shape} differ")
    return kernels.rk4_liouville(rho0, H, float(area_max) / steps, int(steps))


def populations(rho):
    """Real diagonal of a two-qubit density matrix in |00>, |01>, |10>, |11> order."""
    m = np.asarray(rho)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 density matrix, got {m.shape}")
    return tuple(float(x) for x in np.real(np.diagonal(m)))


@dataclass(frozen=True)
class TrajectorySample:
    area: float
    pop00: float
    pop01: float
    pop10: float
    pop11: float
    c_pdd: float
    c_l1: float
    c_re: float
    purity: float


COLUMNS = ("area", "pop00", "pop01", "pop10", "pop11", "c_pdd", "c_l1", "c_re", "purity")


@dataclass
class Trajectory:
    """Column-oriented record of a run; ``rhos`` and ``hamiltonian`` kept for diagnostics."""

    area: np.ndarray
    pops: np.ndarray
    c_pdd: np.ndarray
    c_l1: np.ndarray
    c_re: np.ndarray
    purity: np.ndarray
    rhos: np.ndarray
    hamiltonian: np.ndarray

    def __len__(self):
        return self.area.size

    @property
    def samples(self):
        return [self.sample(k) for k in range(len(self))]

    def sample(self, k):
        return TrajectorySample(
            float(self.area[k]), *(float(x) for x in self.pops[k]),
            float(self.c_pdd[k]), float(self.c_l1[k]), float(self.c_re[k]), float(self.purity[k]),
        )

    def table(self):
        """(steps+1, 9) array in :data:`COLUMNS` order."""
        return np.column_stack([self.area, self.pops, self.c_pdd, self.c_l1, self.c_re, self.purity])

    def index_of(self, area):
        return int(np.argmin(np.abs(self.area - area)))


def evolve(cfg):
    """Integrate ``cfg`` and record populations, quantifiers and purity at every grid point.

    Raises :class:`PurityDrift` if purity leaves ``1 +/- 1e-7`` and
    :class:`NotPureState` if it falls below the quantifier's ``1 - 1e-9`` guard.
    """
    H = two_qubit_hamiltonian(cfg)
    a = cfg.initial_state.amplitudes
    rho0 = np.outer(a, a.conj())
    rhos = integrate(rho0, H, cfg.area_max, cfg.steps)
    area = np.linspace(0.0, cfg.area_max, cfg.steps + 1)

    pur = _batch_purity(rhos)
    bad = np.flatnonzero(~(np.abs(pur - 1.0) <= DRIFT_TOL))
    if bad.size:
        k = bad[0]
        raise PurityDrift(area[k], pur[k], DRIFT_TOL)
    low = np.flatnonzero(pur < 1.0 - PURITY_TOL)
    if low.size:
        raise NotPureState(pur[low[0]], PURITY_TOL)

    pops = _batch_populations(rhos)
    return Trajectory(
        area=area,
        pops=pops,
        c_pdd=_batch_c_pdd(pops),
        c_l1=_batch_c_l1(rhos),
        c_re=_batch_c_re(rhos, pops),
        purity=pur,
        rhos=rhos,
        hamiltonian=H,
    )
