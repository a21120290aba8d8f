# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled stepping kernels.

Arithmetic mirrors _kernels_py expression for expression (and the build
disables FP contraction), so field trajectories are bit-identical across
backends. Energy sums run sequentially here versus numpy's pairwise
summation in the fallback, which can differ at the last few bits.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

NAME = "compiled"

TOROIDAL = 0
POLOIDAL = 1
DIRICHLET_ZERO = 0
NEUMANN_ZERO = 1


def diffusion_evolve(values, r, double dr, double dr2, double inv_2dr,
                     double coef, Py_ssize_t steps, int component, int boundary):
    """Explicit Euler steps of coef * (radial operator); see _kernels_py."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] b_arr = np.array(values, dtype=np.float64, copy=True)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r_arr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = b_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] energies = np.empty(steps + 1, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lap_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] b = b_arr
    cdef double[::1] rr = r_arr
    cdef double[::1] lap = lap_arr
    cdef double[::1] en = energies
    cdef Py_ssize_t i, m
    cdef double t1, t2, e, w

    e = 0.0
    for i in range(n):
        e += b[i] * b[i] * rr[i]
    en[0] = e * dr

    for m in range(1, steps + 1):
        for i in range(1, n - 1):
            t1 = (b[i + 1] - 2.0 * b[i] + b[i - 1]) / dr2
            t2 = (b[i + 1] - b[i - 1]) * inv_2dr / rr[i]
            if component == 0:
                lap[i] = t1 + t2
            else:
                lap[i] = t1 + t2 - b[i] / (rr[i] * rr[i])
        if component == 0:
            lap[0] = 4.0 * (b[1] - b[0]) / dr2
        else:
            lap[0] = 0.0
        if boundary == 0:
            lap[n - 1] = 0.0
        else:
            w = (2.0 * b[n - 2] - 2.0 * b[n - 1]) / dr2
            if component != 0:
                w = w - b[n - 1] / (rr[n - 1] * rr[n - 1])
            lap[n - 1] = w
        e = 0.0
        for i in range(n):
            b[i] = b[i] + coef * lap[i]
            e += b[i] * b[i] * rr[i]
        en[m] = e * dr
    return b_arr, energies


cdef inline void _rhs(double* y, double kap, double tau, double* out) noexcept nogil:
    out[0] = kap * y[3]
    out[1] = kap * y[4]
    out[2] = kap * y[5]
    out[3] = -kap * y[0] + tau * y[6]
    out[4] = -kap * y[1] + tau * y[7]
    out[5] = -kap * y[2] + tau * y[8]
    out[6] = -tau * y[3]
    out[7] = -tau * y[4]
    out[8] = -tau * y[5]
    out[9] = y[0]
    out[10] = y[1]
    out[11] = y[2]


cdef inline void _orthonormalize(double* y) noexcept nogil:
    cdef double nt, nn, nb, d
    nt = sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2])
    y[0] /= nt
    y[1] /= nt
    y[2] /= nt
    d = y[3] * y[0] + y[4] * y[1] + y[5] * y[2]
    y[3] -= d * y[0]
    y[4] -= d * y[1]
    y[5] -= d * y[2]
    nn = sqrt(y[3] * y[3] + y[4] * y[4] + y[5] * y[5])
    y[3] /= nn
    y[4] /= nn
    y[5] /= nn
    d = y[6] * y[0] + y[7] * y[1] + y[8] * y[2]
    y[6] -= d * y[0]
    y[7] -= d * y[1]
    y[8] -= d * y[2]
    d = y[6] * y[3] + y[7] * y[4] + y[8] * y[5]
    y[6] -= d * y[3]
    y[7] -= d * y[4]
    y[8] -= d * y[5]
    nb = sqrt(y[6] * y[6] + y[7] * y[7] + y[8] * y[8])
    y[6] /= nb
    y[7] /= nb
    y[8] /= nb


def frenet_transport(y0, double s0, double h, Py_ssize_t steps,
                     double k_off, double k_sl, double t_off, double t_sl,
                     Py_ssize_t reorth_every):
    """RK4 frame transport for affine kappa(s) and tau(s); see _kernels_py."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] traj_arr = np.empty((steps + 1, 12), dtype=np.float64)
    cdef double[:, ::1] traj = traj_arr
    cdef double y[12]
    cdef double k1[12]
    cdef double k2[12]
    cdef double k3[12]
    cdef double k4[12]
    cdef double yt[12]
    cdef Py_ssize_t i, m
    cdef double s, kap, tau
    cdef double half_h = 0.5 * h
    cdef double sixth_h = h / 6.0

    y0_arr = np.ascontiguousarray(y0, dtype=np.float64)
    cdef double[::1] y0v = y0_arr
    for i in range(12):
        y[i] = y0v[i]
        traj[0, i] = y[i]

    for m in range(1, steps + 1):
        s = s0 + (m - 1) * h
        kap = k_off + k_sl * s
        tau = t_off + t_sl * s
        _rhs(y, kap, tau, k1)
        for i in range(12):
            yt[i] = y[i] + half_h * k1[i]
        kap = k_off + k_sl * (s + half_h)
        tau = t_off + t_sl * (s + half_h)
        _rhs(yt, kap, tau, k2)
        for i in range(12):
            yt[i] = y[i] + half_h * k2[i]
        _rhs(yt, kap, tau, k3)
        for i in range(12):
            yt[i] = y[i] + h * k3[i]
        kap = k_off + k_sl * (s + h)
        tau = t_off + t_sl * (s + h)
        _rhs(yt, kap, tau, k4)
        for i in range(12):
            y[i] = y[i] + sixth_h * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
        if reorth_every > 0 and m % reorth_every == 0:
            _orthonormalize(y)
        for i in range(12):
            traj[m, i] = y[i]
    return traj_arr
