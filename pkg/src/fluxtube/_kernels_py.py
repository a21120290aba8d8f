"""Pure-Python stepping kernels (fallback twins of the compiled extension).

Every arithmetic expression here mirrors the compiled kernels operation
for operation, so both backends produce bit-identical field trajectories.
Energy sums may differ from the compiled backend at the last few bits
because numpy uses pairwise summation.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "python"

TOROIDAL = 0
POLOIDAL = 1
DIRICHLET_ZERO = 0
NEUMANN_ZERO = 1


def diffusion_evolve(values, r, dr, dr2, inv_2dr, coef, steps, component, boundary):
    """Explicit Euler steps of coef * (radial operator) on a uniform grid.

    Returns (final_values, energies) with energies[k] = sum(B^2 r) * dr
    after k steps (index 0 is the initial energy). The origin uses the
    even-parity regularization for the toroidal component and stays pinned
    at zero for the poloidal one; the wall node is held fixed under
    Dirichlet and mirrored under Neumann.
    """
    b = np.array(values, dtype=float, copy=True)
    n = b.size
    energies = np.empty(steps + 1)
    energies[0] = float(np.sum(b * b * r)) * dr
    lap = np.empty(n)
    for m in range(1, steps + 1):
        t1 = (b[2:] - 2.0 * b[1:-1] + b[:-2]) / dr2
        t2 = (b[2:] - b[:-2]) * inv_2dr / r[1:-1]
        if component == TOROIDAL:
            lap[1:-1] = t1 + t2
            lap[0] = 4.0 * (b[1] - b[0]) / dr2
        else:
            lap[1:-1] = t1 + t2 - b[1:-1] / (r[1:-1] * r[1:-1])
            lap[0] = 0.0
        if boundary == DIRICHLET_ZERO:
            lap[n - 1] = 0.0
        else:
            w = (2.0 * b[n - 2] - 2.0 * b[n - 1]) / dr2
            if component == POLOIDAL:
                w = w - b[n - 1] / (r[n - 1] * r[n - 1])
            lap[n - 1] = w
        b = b + coef * lap
        energies[m] = float(np.sum(b * b * r)) * dr
    return b, energies


def _frenet_rhs(y, kap, tau):
    """Derivative of (t, n, b, x): the frame equations plus dx/ds = t."""
    return (
        kap * y[3], kap * y[4], kap * y[5],
        -kap * y[0] + tau * y[6], -kap * y[1] + tau * y[7], -kap * y[2] + tau * y[8],
        -tau * y[3], -tau * y[4], -tau * y[5],
        y[0], y[1], y[2],
    )


def _orthonormalize(y):
    """Gram-Schmidt in the order t, n, b (modified form); mutates the list."""
    nt = math.sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2])
    y[0] /= nt
    y[1] /= nt
    y[2] /= nt
    d = y[3] * y[0] + y[4] * y[1] + y[5] * y[2]
    y[3] -= d * y[0]
    y[4] -= d * y[1]
    y[5] -= d * y[2]
    nn = math.sqrt(y[3] * y[3] + y[4] * y[4] + y[5] * y[5])
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
    nb = math.sqrt(y[6] * y[6] + y[7] * y[7] + y[8] * y[8])
    y[6] /= nb
    y[7] /= nb
    y[8] /= nb


def _rk4_step(y, s, h, half_h, sixth_h, kappa_fn, tau_fn):
    k1 = _frenet_rhs(y, kappa_fn(s), tau_fn(s))
    y2 = [y[i] + half_h * k1[i] for i in range(12)]
    kap = kappa_fn(s + half_h)
    tau = tau_fn(s + half_h)
    k2 = _frenet_rhs(y2, kap, tau)
    y3 = [y[i] + half_h * k2[i] for i in range(12)]
    k3 = _frenet_rhs(y3, kap, tau)
    y4 = [y[i] + h * k3[i] for i in range(12)]
    k4 = _frenet_rhs(y4, kappa_fn(s + h), tau_fn(s + h))
    return [
        y[i] + sixth_h * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
        for i in range(12)
    ]


def frenet_transport_generic(y0, s0, h, steps, kappa_fn, tau_fn, reorth_every):
    """Fixed-step RK4 frame transport with arbitrary profile callables."""
    traj = np.empty((steps + 1, 12))
    y = [float(v) for v in y0]
    traj[0] = y
    half_h = 0.5 * h
    sixth_h = h / 6.0
    for m in range(1, steps + 1):
        s = s0 + (m - 1) * h
        y = _rk4_step(y, s, h, half_h, sixth_h, kappa_fn, tau_fn)
        if reorth_every > 0 and m % reorth_every == 0:
            _orthonormalize(y)
        traj[m] = y
    return traj


def frenet_transport(y0, s0, h, steps, k_off, k_sl, t_off, t_sl, reorth_every):
    """RK4 frame transport for affine kappa(s) and tau(s)."""
    return frenet_transport_generic(
        y0, s0, h, steps,
        lambda s: k_off + k_sl * s,
        lambda s: t_off + t_sl * s,
        reorth_every,
    )
