"""Induction-equation operators in tube coordinates.

Assembles the thin-tube diffusion operator, the field-stretching term
B . grad(v) for untwisted tubes, the three thin-tube component residuals,
and the constraint ledger (solenoidal condition, axial independence,
rigid vorticity, filament-flow divergence). Residuals follow the
convention residual = (left side) - (right side) of the relation checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import DomainError
from .frenet import CurveGeometry
from .geometry import CoordPoint

_FD_STEP = 1e-5
_PARITY_TOL = 1e-6


@dataclass(frozen=True)
class RadialField:
    """Radial profile with optional analytic derivatives.

    Derivatives fall back to central differences of step fd_step (shrunk
    near the origin so the stencil stays at r >= 0).
    """

    func: Callable[[float], float]
    deriv: Callable[[float], float] | None = None
    deriv2: Callable[[float], float] | None = None
    fd_step: float = _FD_STEP

    def __call__(self, r: float) -> float:
        return float(self.func(r))

    def _h(self, r: float) -> float:
        return min(self.fd_step, 0.5 * r) if r > 0.0 else self.fd_step

    def d1(self, r: float) -> float:
        if self.deriv is not None:
            return float(self.deriv(r))
        h = self._h(r)
        return (self(r + h) - self(r - h)) / (2.0 * h)

    def d2(self, r: float) -> float:
        if self.deriv2 is not None:
            return float(self.deriv2(r))
        h = self._h(r)
        return (self(r + h) - 2.0 * self(r) + self(r - h)) / (h * h)


def constant_field(value: float) -> RadialField:
    return RadialField(lambda r: value, deriv=lambda r: 0.0, deriv2=lambda r: 0.0)


@dataclass
class FieldDecomposition:
    """Magnetic and flow components in tube / filament coordinates.

    Scalar values cover the pointwise algebra; the optional radial
    profiles feed the diffusion operator and the optional axial callables
    supply s-dependence to the constraint checks. v_theta = None selects
    the rigid-vorticity parameterization v_theta = omega0 * r.
    """

    B_r: float = 0.0
    B_theta: float = 0.0
    B_s: float = 0.0
    v_s: float = 0.0
    v_n: float = 0.0
    v_b: float = 0.0
    omega0: float = 0.0
    gamma: float = 0.0
    eta: float = 0.0
    v_theta: float | None = None
    B_s_radial: RadialField | None = None
    B_theta_radial: RadialField | None = None
    B_theta_axial: Callable[[float], float] | None = None
    v_theta_axial: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.eta < 0.0:
            raise DomainError(f"diffusivity must be >= 0, got {self.eta}")


@dataclass(frozen=True)
class LaplacianComponents:
    """Diffusion-operator output along the frame directions."""

    t: float
    e_theta: float
    n: float


def tube_laplacian(
    field: FieldDecomposition, curve: CurveGeometry, p: CoordPoint
) -> LaplacianComponents:
    """Thin-tube diffusion operator applied to (B_s, B_theta) at p.

    t component:       [d2/dr2 + (1/r) d/dr - kappa^2] B_s
    e_theta component: [d2/dr2 + (1/r) d/dr - 1/r^2] B_theta
    n component:       (d kappa / d s) B_s

    At r = 0 the parity-regularized limits apply; they require B_s even
    (vanishing slope) and B_theta odd (vanishing value) and reject
    profiles violating that.
    """
    bs = field.B_s_radial if field.B_s_radial is not None else constant_field(field.B_s)
    bth = (
        field.B_theta_radial
        if field.B_theta_radial is not None
        else constant_field(field.B_theta)
    )
    kap = curve.kappa(p.s)
    dkap = curve.kappa.derivative(p.s)
    r = p.r
    if r == 0.0:
        h = bs.fd_step
        bs0 = bs(0.0)
        slope = (-3.0 * bs0 + 4.0 * bs(h) - bs(2.0 * h)) / (2.0 * h)
        if abs(slope) > _PARITY_TOL * max(1.0, abs(bs0)):
            raise DomainError(
                f"axial component must be even at the origin (slope {slope:.3e})"
            )
        bth0 = bth(0.0)
        if abs(bth0) > 1e-12 * max(1.0, abs(bth(h))):
            raise DomainError(
                f"poloidal component must be odd at the origin (value {bth0:.3e})"
            )
        if bs.deriv2 is not None:
            second = bs.d2(0.0)
        else:
            second = 2.0 * (bs(h) - bs0) / (h * h)
        return LaplacianComponents(
            t=2.0 * second - kap * kap * bs0,
            e_theta=0.0,
            n=dkap * bs0,
        )
    t_comp = bs.d2(r) + bs.d1(r) / r - kap * kap * bs(r)
    e_comp = bth.d2(r) + bth.d1(r) / r - bth(r) / (r * r)
    return LaplacianComponents(t=t_comp, e_theta=e_comp, n=dkap * bs(r))


class StretchingVector(NamedTuple):
    """Frame components of B . grad(v) for the untwisted thin tube."""

    t: float
    n: float
    b: float


def stretching_term(
    field: FieldDecomposition, curve: CurveGeometry, theta: float, s: float = 0.0
) -> StretchingVector:
    """B . grad(v) for an untwisted thin tube (K = 1, zero torsion).

    Two contributions survive: the axial flow stretched by curvature,
    v_s kappa B_s along n, and the rigid-rotation shear sampled by the
    poloidal field, (B_theta / r) d/d theta (omega0 r e_theta)
    = -omega0 B_theta e_r. The identity d(e_theta)/d theta = -e_r follows
    from d(e_r)/d theta = e_theta and orthonormality; e_r resolves to
    cos(theta) n + sin(theta) b. The radial field does not enter.
    """
    kap = curve.kappa(s)
    shear = field.omega0 * field.B_theta
    return StretchingVector(
        t=0.0,
        n=field.v_s * kap * field.B_s - shear * math.cos(theta),
        b=-shear * math.sin(theta),
    )


class ThinTubeResiduals(NamedTuple):
    """Residuals of the three thin-tube component equations, each
    formed as lhs - rhs (normal, binormal, axial)."""

    normal: float
    binormal: float
    axial: float


def thin_tube_residuals(
    field: FieldDecomposition, curve: CurveGeometry, theta: float, s: float = 0.0
) -> ThinTubeResiduals:
    """Component residuals of the diffusionless thin-tube balance.

    normal:   (-gamma B_th sin - w_cos) - (B_s v_s kappa - w_cos)
    binormal: (-gamma B_th cos - w_sin) - (-w_sin)
    axial:    gamma B_s

    with w_cos = omega0 B_theta cos(theta) and w_sin the sine analogue;
    each omega0 term is computed once so the algebraic cancellations
    hold exactly in floating point.
    """
    kap = curve.kappa(s)
    b_th = field.B_theta
    w_cos = field.omega0 * b_th * math.cos(theta)
    w_sin = field.omega0 * b_th * math.sin(theta)
    lhs_n = -field.gamma * b_th * math.sin(theta) - w_cos
    rhs_n = field.B_s * field.v_s * kap - w_cos
    lhs_b = -field.gamma * b_th * math.cos(theta) - w_sin
    rhs_b = -w_sin
    return ThinTubeResiduals(
        normal=lhs_n - rhs_n,
        binormal=lhs_b - rhs_b,
        axial=field.gamma * field.B_s,
    )


@dataclass(frozen=True)
class ConstraintReport:
    """Ordered constraint residual ledger."""

    entries: tuple[tuple[str, float], ...]

    def value(self, name: str) -> float:
        for key, val in self.entries:
            if key == name:
                return val
        raise KeyError(name)

    @property
    def compressible(self) -> bool:
        return self.value("flow_divergence") != 0.0

    def as_text(self) -> str:
        lines = [f"{name} = {value:.17g}" for name, value in self.entries]
        if self.compressible:
            lines.append("note: nonzero flow divergence signals a compressible flow")
        return "\n".join(lines)


def _axial_derivative(func: Callable[[float], float], s: float) -> float:
    h = _FD_STEP * max(1.0, abs(s))
    return (float(func(s + h)) - float(func(s - h))) / (2.0 * h)


def constraint_checks(
    field: FieldDecomposition,
    curve: CurveGeometry,
    p: CoordPoint = CoordPoint(1.0, 0.0, 0.0),
) -> ConstraintReport:
    """Evaluate the constraint residuals at p.

    solenoidal_residual             d_s B_theta - kappa tau r sin(theta) B_theta
    poloidal_field_axial_derivative d_s B_theta (zero for untwisted tubes)
    poloidal_flow_axial_derivative  d_s v_theta (incompressibility)
    rigid_vorticity_residual        v_theta - omega0 r
    flow_divergence                 v_n kappa (nonzero marks compressible flow)
    """
    kap = curve.kappa(p.s)
    tau = curve.tau(p.s)
    if field.B_theta_axial is not None:
        b_th = float(field.B_theta_axial(p.s))
        db_ds = _axial_derivative(field.B_theta_axial, p.s)
    else:
        b_th = field.B_theta
        db_ds = 0.0
    dv_ds = (
        _axial_derivative(field.v_theta_axial, p.s)
        if field.v_theta_axial is not None
        else 0.0
    )
    vort = 0.0 if field.v_theta is None else field.v_theta - field.omega0 * p.r
    entries = (
        ("solenoidal_residual", db_ds - kap * tau * p.r * math.sin(p.theta) * b_th),
        ("poloidal_field_axial_derivative", db_ds),
        ("poloidal_flow_axial_derivative", dv_ds),
        ("rigid_vorticity_residual", vort),
        ("flow_divergence", field.v_n * kap),
    )
    return ConstraintReport(entries)
