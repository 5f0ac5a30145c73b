# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Must stay numerically equivalent to _kernels_py."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline void _rhs(const double complex[:, ::1] rho, const double complex[:, ::1] H,
                      double complex[:, ::1] out, Py_ssize_t n) noexcept nogil:
    # out = i (rho H - H rho)
    cdef Py_ssize_t i, j, k
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = acc + rho[i, k] * H[k, j] - H[i, k] * rho[k, j]
            out[i, j] = 1j * acc


def liouville_rhs(rho, H):
    cdef const double complex[:, ::1] r = np.ascontiguousarray(rho, dtype=np.complex128)
    cdef const double complex[:, ::1] h = np.ascontiguousarray(H, dtype=np.complex128)
    out = np.empty_like(np.asarray(r))
    cdef double complex[:, ::1] o = out
    _rhs(r, h, o, r.shape[0])
    return out


def rk4_liouville(rho0, H, double dt, Py_ssize_t steps):
    """Classical RK4 for d(rho)/dt = i[rho, H]; returns all steps+1 states."""
    cdef const double complex[:, ::1] h = np.ascontiguousarray(H, dtype=np.complex128)
    cdef Py_ssize_t n = h.shape[0]
    traj = np.empty((steps + 1, n, n), dtype=np.complex128)
    cdef double complex[:, :, ::1] T = traj
    cdef double complex[:, ::1] cur = np.ascontiguousarray(rho0, dtype=np.complex128).copy()
    cdef double complex[:, ::1] tmp = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] k1 = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] k2 = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] k3 = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] k4 = np.empty((n, n), dtype=np.complex128)
    cdef Py_ssize_t s, i, j
    cdef double half = 0.5 * dt
    cdef double sixth = dt / 6.0

    with nogil:
        for i in range(n):
            for j in range(n):
                T[0, i, j] = cur[i, j]
        for s in range(1, steps + 1):
            _rhs(cur, h, k1, n)
            for i in range(n):
                for j in range(n):
                    tmp[i, j] = cur[i, j] + half * k1[i, j]
            _rhs(tmp, h, k2, n)
            for i in range(n):
                for j in range(n):
                    tmp[i, j] = cur[i, j] + half * k2[i, j]
            _rhs(tmp, h, k3, n)
            for i in range(n):
                for j in range(n):
                    tmp[i, j] = cur[i, j] + dt * k3[i, j]
            _rhs(tmp, h, k4, n)
            for i in range(n):
                for j in range(n):
                    cur[i, j] = cur[i, j] + sixth * (k1[i, j] + 2.0 * k2[i, j] + 2.0 * k3[i, j] + k4[i, j])
                    T[s, i, j] = cur[i, j]
    return traj


def pdd_pair_sums(pops):
    """Row-wise sum over ordered pairs i != j of |p_i - p_j|."""
    cdef const double[:, ::1] P = np.ascontiguousarray(np.atleast_2d(pops), dtype=np.float64)
    cdef Py_ssize_t m = P.shape[0], n = P.shape[1], r, i, j
    out = np.zeros(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef double acc, d
    with nogil:
        for r in range(m):
            acc = 0.0
            for i in range(n):
                for j in range(i + 1, n):
                    d = P[r, i] - P[r, j]
                    acc += d if d >= 0 else -d
            o[r] = 2.0 * acc
    return out
