"""Pure numpy implementations of the hot loops (fallback for _kernels)."""

import numpy as np


def liouville_rhs(rho, H):
    rho = np.asarray(rho, dtype=np.complex128)
    H = np.asarray(H, dtype=np.complex128)
    return 1j * (rho @ H - H @ rho)


def rk4_liouville(rho0, H, dt, steps):
    """Classical RK4 for d(rho)/dt = i[rho, H]; returns all steps+1 states."""
    H = np.asarray(H, dtype=np.complex128)
    cur = np.array(rho0, dtype=np.complex128)
    n = H.shape[0]
    traj = np.empty((steps + 1, n, n), dtype=np.complex128)
    traj[0] = cur
    half = 0.5 * dt
    for s in range(1, steps + 1):
        k1 = liouville_rhs(cur, H)
        k2 = liouville_rhs(cur + half * k1, H)
        k3 = liouville_rhs(cur + half * k2, H)
        k4 = liouville_rhs(cur + dt * k3, H)
        cur = cur + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        traj[s] = cur
    return traj


def pdd_pair_sums(pops):
    """Row-wise sum over ordered pairs i != j of |p_i - p_j|."""
    p = np.atleast_2d(np.asarray(pops, dtype=np.float64))
    return np.abs(p[:, :, None] - p[:, None, :]).sum(axis=(1, 2))
