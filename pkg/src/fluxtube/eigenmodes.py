"""Radial mode solutions and the in-repo Bessel kernel.

The zero-order Bessel function is implemented locally (power series plus
the large-argument Hankel asymptotic) so closed-form mode checks need no
external special-function library. The toroidal mode equation
[d^2/dr^2 + (1/r) d/dr - gamma/eta] B = 0 is solved by adaptive numeric
integration from a regular series start and cross-checked against the
closed form; the poloidal near-axis solution is evaluated directly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._ode import integrate_grid
from .errors import ApproximationWarning, ConsistencyError, DomainError

# Extended precision for series accumulation: on x86-64 Linux longdouble is
# the 80-bit type, which keeps the alternating series below 1e-13 absolute
# error out to the asymptotic handover.
_LD = np.longdouble
_PI_LD = _LD("3.14159265358979323846264338327950288")
_SERIES_CUTOFF = 16.0
_SERIES_TERMS = 80
_ASYMPTOTIC_TERMS = 24


def _j0_series(x_ld):
    z = -(x_ld * x_ld) / _LD(4)
    term = np.ones_like(x_ld)
    total = np.ones_like(x_ld)
    for k in range(1, _SERIES_TERMS + 1):
        term = term * z / _LD(k * k)
        total = total + term
    return total


def _asymptotic_magnitudes():
    mags = [np.longdouble(1.0)]
    for k in range(1, _ASYMPTOTIC_TERMS + 1):
        mags.append(mags[-1] * _LD((2 * k - 1) ** 2) / _LD(8 * k))
    return mags


_ASY_MAG = _asymptotic_magnitudes()


def _j0_asymptotic(x_ld):
    inv = 1.0 / x_ld
    p = np.zeros_like(x_ld)
    q = np.zeros_like(x_ld)
    sign = 1.0
    for j in range(0, _ASYMPTOTIC_TERMS, 2):
        p = p + sign * _ASY_MAG[j] * inv ** j
        q = q + sign * _ASY_MAG[j + 1] * inv ** (j + 1)
        sign = -sign
    omega = x_ld - _PI_LD / 4.0
    amp = np.sqrt(2.0 / (_PI_LD * x_ld))
    return amp * (np.cos(omega) * p + np.sin(omega) * q)


def bessel_j0(x):
    """J0(x), accurate to better than 1e-12 absolute for |x| <= 50.

    Power series for |x| <= 16, Hankel asymptotic beyond; both branches
    accumulate in extended precision. Returns a float for scalar input,
    preserving longdouble when given longdouble.
    """
    arr = np.asarray(x)
    keep_ld = arr.dtype == np.longdouble
    xa = np.abs(arr.astype(_LD))
    small = xa <= _SERIES_CUTOFF
    out = np.where(
        small,
        _j0_series(np.where(small, xa, _LD(0))),
        _j0_asymptotic(np.where(small, _LD(2 * _SERIES_CUTOFF), xa)),
    )
    if not keep_ld:
        out = out.astype(float)
    if np.isscalar(x) or arr.ndim == 0:
        return out[()] if keep_ld else float(out)
    return out


def bessel_j0_zero(k: int) -> float:
    """k-th positive zero of J0 by bisection on the local evaluation."""
    if k < 1:
        raise DomainError(f"zero index must be >= 1, got {k}")
    est = (k - 0.25) * math.pi + 1.0 / (8.0 * (k - 0.25) * math.pi)
    lo, hi = est - 0.5, est + 0.5
    flo = bessel_j0(lo)
    fhi = bessel_j0(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ConsistencyError(f"bisection bracket failed for zero {k}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = bessel_j0(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class RadialProfile:
    """Field samples on a uniform radial grid."""

    r_grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.r_grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "r_grid", r)
        object.__setattr__(self, "values", v)
        if r.ndim != 1 or r.size < 16:
            raise DomainError(f"grid must be 1-D with >= 16 points, got {r.shape}")
        if v.shape != r.shape:
            raise DomainError("values and grid shapes differ")
        d = np.diff(r)
        if np.any(d <= 0.0):
            raise DomainError("grid must be strictly increasing")
        dr = (r[-1] - r[0]) / (r.size - 1)
        if np.max(np.abs(d - dr)) > 1e-9 * dr:
            raise DomainError("grid must be uniform")

    @property
    def spacing(self) -> float:
        return (float(self.r_grid[-1]) - float(self.r_grid[0])) / (self.r_grid.size - 1)


def solve_toroidal_mode(
    gamma: float,
    eta: float,
    r_max: float,
    n: int,
    crosscheck: bool = True,
) -> RadialProfile:
    """Regular solution of [d^2/dr^2 + (1/r) d/dr - gamma/eta] B = 0, B(0)=1.

    Integrates adaptively from a series start one grid spacing off axis.
    For gamma < 0 the result is the oscillatory J0 profile, for gamma = 0
    the constant profile (the operator annihilates constants, so no radial
    oscillation occurs in the marginal case), and for gamma > 0 the
    growing regular solution of modified Bessel kind. With crosscheck on,
    the result is verified against the closed form (gamma <= 0) or a
    monotonicity argument (gamma > 0).
    """
    if eta <= 0.0:
        raise DomainError(f"diffusivity must be positive, got {eta}")
    if n < 16:
        raise DomainError(f"need at least 16 grid points, got {n}")
    if r_max <= 0.0:
        raise DomainError(f"domain radius must be positive, got {r_max}")
    grid = np.linspace(0.0, r_max, n)
    if gamma == 0.0:
        return RadialProfile(grid, np.ones(n))
    ratio = gamma / eta

    def rhs(r, y):
        return np.array([y[1], -y[1] / r + ratio * y[0]])

    eps = grid[1]
    y0 = np.array(
        [
            1.0 + 0.25 * ratio * eps**2 + ratio**2 * eps**4 / 64.0,
            0.5 * ratio * eps + ratio**2 * eps**3 / 16.0,
        ]
    )
    states = integrate_grid(rhs, eps, y0, grid[1:], rtol=1e-11, atol=1e-13)
    values = np.empty(n)
    values[0] = 1.0
    values[1:] = states[:, 0]
    profile = RadialProfile(grid, values)
    if crosscheck:
        _crosscheck_toroidal(profile, ratio)
    return profile


def _crosscheck_toroidal(profile: RadialProfile, ratio: float) -> None:
    scale = float(np.max(np.abs(profile.values)))
    if ratio < 0.0:
        closed = bessel_j0(math.sqrt(-ratio) * profile.r_grid)
        worst = float(np.max(np.abs(profile.values - closed)))
        if worst > 1e-6 * scale:
            raise ConsistencyError(
                f"integrated mode deviates from the closed form by {worst:.3e}"
            )
    else:
        diffs = np.diff(profile.values)
        if float(np.min(profile.values)) < 1.0 - 1e-9 or float(np.min(diffs)) < -1e-9 * scale:
            raise ConsistencyError("growing mode is not positive and increasing")


@dataclass(frozen=True)
class NearAxisPoloidal:
    """Near-axis poloidal solution value with residual diagnostics."""

    value: float
    marginal_residual: float
    full_residual: float
    within_approximation: bool


def solve_poloidal_near_axis(
    B0: float, gamma: float, eta: float, r: float
) -> NearAxisPoloidal:
    """Marginal near-axis poloidal solution B_theta = B0 * r at radius r.

    Also returns the residual of the marginal first-order equation
    [d/dr - 1/r] B_theta (identically zero for the linear solution) and of
    the full equation [d/dr - (gamma r / eta + 1/r)] B_theta. Emits an
    ApproximationWarning once gamma r^2 / eta exceeds 0.1.
    """
    if eta <= 0.0:
        raise DomainError(f"diffusivity must be positive, got {eta}")
    if r < 0.0:
        raise DomainError(f"radius must be >= 0, got {r}")
    if r == 0.0:
        return NearAxisPoloidal(0.0, 0.0, 0.0, True)
    quality = gamma * r * r / eta
    within = abs(quality) <= 0.1
    if not within:
        warnings.warn(
            f"near-axis approximation strained: gamma r^2 / eta = {quality:g}",
            ApproximationWarning,
            stacklevel=2,
        )
    value = B0 * r
    marginal_residual = B0 - value / r
    full_residual = B0 - (gamma * r / eta + 1.0 / r) * value
    return NearAxisPoloidal(value, marginal_residual, full_residual, within)
