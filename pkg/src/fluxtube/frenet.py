"""Frame transport along curves driven by curvature and torsion.

Integrates the frame equations dt/ds = kappa n, dn/ds = -kappa t + tau b,
db/ds = -tau n together with the position dx/ds = t, using fixed-step RK4
with periodic re-orthonormalization. The frame fields feed the induction
and classifier modules; position reconstruction is plumbing used by the
closure checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from ._kernels_py import frenet_transport_generic
from .errors import DomainError
from .profiles import Profile, as_profile

ORTHONORMALITY_TOL = 1e-9


@dataclass(frozen=True)
class FrenetFrame:
    """Orthonormal (t, n, b) triad plus the curve position."""

    t: np.ndarray
    n: np.ndarray
    b: np.ndarray
    position: np.ndarray

    def __post_init__(self):
        for name in ("t", "n", "b", "position"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))

    @staticmethod
    def standard(position=(0.0, 0.0, 0.0)) -> "FrenetFrame":
        return FrenetFrame(
            t=np.array([1.0, 0.0, 0.0]),
            n=np.array([0.0, 1.0, 0.0]),
            b=np.array([0.0, 0.0, 1.0]),
            position=np.asarray(position, dtype=float),
        )

    def orthonormality_defect(self) -> float:
        """Worst deviation from unit norms, orthogonality, and b = t x n."""
        t, n, b = self.t, self.n, self.b
        devs = [
            abs(float(t @ t) - 1.0),
            abs(float(n @ n) - 1.0),
            abs(float(b @ b) - 1.0),
            abs(float(t @ n)),
            abs(float(t @ b)),
            abs(float(n @ b)),
            float(np.max(np.abs(b - np.cross(t, n)))),
        ]
        return max(devs)

    def packed(self) -> np.ndarray:
        return np.concatenate([self.t, self.n, self.b, self.position])


@dataclass(frozen=True)
class CurveGeometry:
    """Curvature/torsion profiles over an arclength interval."""

    kappa: Profile
    tau: Profile
    s_span: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        object.__setattr__(self, "kappa", as_profile(self.kappa))
        object.__setattr__(self, "tau", as_profile(self.tau))
        s0, s1 = self.s_span
        object.__setattr__(self, "s_span", (float(s0), float(s1)))
        if not (np.isfinite(s0) and np.isfinite(s1)) or s0 == s1:
            raise DomainError(f"invalid arclength span {self.s_span}")


def transport_frame(
    curve: CurveGeometry,
    init: FrenetFrame,
    steps: int,
    reorthonormalize_every: int = 100,
    backend_name: str | None = None,
) -> list[FrenetFrame]:
    """Transport init along the curve; returns steps+1 frames including init.

    Affine profiles take the selected kernel backend; arbitrary callables
    fall back to the generic Python integrator with identical arithmetic.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    defect = init.orthonormality_defect()
    if defect > ORTHONORMALITY_TOL:
        raise DomainError(
            f"initial frame is not orthonormal (defect {defect:.3e} > "
            f"{ORTHONORMALITY_TOL:g})"
        )
    s0, s1 = curve.s_span
    h = (s1 - s0) / steps
    y0 = init.packed()
    kc = curve.kappa.affine_coefficients
    tc = curve.tau.affine_coefficients
    if kc is not None and tc is not None:
        kern = backend.get_kernels(backend_name)
        traj = kern.frenet_transport(
            y0, s0, h, steps, kc[0], kc[1], tc[0], tc[1], reorthonormalize_every
        )
    else:
        traj = frenet_transport_generic(
            y0, s0, h, steps, curve.kappa, curve.tau, reorthonormalize_every
        )
    return [
        FrenetFrame(t=row[0:3], n=row[3:6], b=row[6:9], position=row[9:12])
        for row in traj
    ]


@dataclass(frozen=True)
class FrameDerivativeTerms:
    """Tangent-space derivatives of the tube basis vectors.

    d_s e_theta   = ds_etheta_on_t * t      (coefficient -tau sin(theta))
    d_theta e_r   = dtheta_er_on_etheta * e_theta   (coefficient +1)
    d_r e_theta   = dr_etheta_on_er * e_r   (coefficient -1)
    """

    ds_etheta_on_t: float
    dtheta_er_on_etheta: float
    dr_etheta_on_er: float


def frame_derivative_terms(
    curve: CurveGeometry, theta: float, s: float = 0.0
) -> FrameDerivativeTerms:
    """Coefficients of the basis-vector derivative relations at (theta, s)."""
    tau = curve.tau(s)
    return FrameDerivativeTerms(
        ds_etheta_on_t=-tau * np.sin(theta),
        dtheta_er_on_etheta=1.0,
        dr_etheta_on_er=-1.0,
    )
