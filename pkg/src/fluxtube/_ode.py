"""Adaptive embedded Runge-Kutta integration (Cash-Karp 4(5)).

Small self-contained integrator for the radial mode equations; keeps the
package free of heavyweight solver dependencies.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_A = (0.0, 0.2, 0.3, 0.6, 1.0, 0.875)
_B = (
    (),
    (0.2,),
    (3.0 / 40.0, 9.0 / 40.0),
    (0.3, -0.9, 1.2),
    (-11.0 / 54.0, 2.5, -70.0 / 27.0, 35.0 / 27.0),
    (1631.0 / 55296.0, 175.0 / 512.0, 575.0 / 13824.0, 44275.0 / 110592.0, 253.0 / 4096.0),
)
_C5 = (37.0 / 378.0, 0.0, 250.0 / 621.0, 125.0 / 594.0, 0.0, 512.0 / 1771.0)
_C4 = (
    2825.0 / 27648.0,
    0.0,
    18575.0 / 48384.0,
    13525.0 / 55296.0,
    277.0 / 14336.0,
    0.25,
)


def integrate_to(f, t0, y0, t1, rtol=1e-10, atol=1e-12, max_steps=200000):
    """Integrate y' = f(t, y) from t0 to t1; returns y(t1)."""
    t = float(t0)
    y = np.asarray(y0, dtype=float).copy()
    if t1 == t:
        return y
    direction = 1.0 if t1 > t else -1.0
    h = direction * max(abs(t1 - t) * 1e-3, 1e-12)
    ks = [None] * 6
    for _ in range(max_steps):
        if direction * (t + h - t1) > 0.0:
            h = t1 - t
        ks[0] = f(t, y)
        for i in range(1, 6):
            yi = y.copy()
            for j, bij in enumerate(_B[i]):
                yi += (h * bij) * ks[j]
            ks[i] = f(t + _A[i] * h, yi)
        y5 = y.copy()
        y4 = y.copy()
        for i in range(6):
            if _C5[i] != 0.0:
                y5 += (h * _C5[i]) * ks[i]
            if _C4[i] != 0.0:
                y4 += (h * _C4[i]) * ks[i]
        scale = atol + rtol * np.maximum(np.abs(y), np.abs(y5))
        err = float(np.max(np.abs(y5 - y4) / scale))
        if err <= 1.0:
            t += h
            y = y5
            if t == t1:
                return y
            grow = 0.9 * err ** -0.2 if err > 0.0 else 5.0
            h *= min(5.0, grow)
        else:
            h *= max(0.1, 0.9 * err ** -0.25)
        if abs(h) < 1e-15 * max(1.0, abs(t)):
            raise DomainError(f"step size underflow at t={t:g}")
    raise DomainError(f"integration did not reach t={t1:g} in {max_steps} steps")


def integrate_grid(f, t0, y0, ts, rtol=1e-10, atol=1e-12):
    """Integrate sequentially through the nodes ts; returns the stacked states."""
    out = np.empty((len(ts), np.size(y0)))
    t = float(t0)
    y = np.asarray(y0, dtype=float)
    for i, tn in enumerate(ts):
        y = integrate_to(f, t, y, float(tn), rtol=rtol, atol=atol)
        t = float(tn)
        out[i] = y
    return out
