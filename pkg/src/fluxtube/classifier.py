"""Dynamo-regime decision logic.

Encodes the analytic conclusions as explicit, total decision rules: the
thin-tube anti-dynamo result, the filament growth-rate case split, the
helical-filament rate gamma = tau0 (1 + eta tau0), and the thick-tube
shear-flow constraint chain. Every report carries the growth rate, its
zero-diffusivity limit, a regime tag, and a residual ledger.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .eigenmodes import RadialProfile
from .frenet import CurveGeometry
from .induction import FieldDecomposition
from .profiles import ShearFlowCurvature

#: Width of the marginal band in the regime taxonomy.
REGIME_TOL = 1e-12

_COS_FLOOR = 1e-12


class Regime(enum.Enum):
    FAST_DYNAMO = "FastDynamo"
    SLOW_DYNAMO = "SlowDynamo"
    MARGINAL = "Marginal"
    DECAYING = "Decaying"
    NON_DYNAMO = "NonDynamo"


def classify_regime(
    gamma: float,
    gamma_limit: float,
    structurally_forced: bool = False,
    tol: float = REGIME_TOL,
) -> Regime:
    """Total, deterministic map from (gamma, zero-diffusivity limit) to a tag.

    Fast means growth survives the zero-diffusivity limit; slow means
    growth requires finite diffusivity. structurally_forced marks rates
    that vanish identically by the component equations rather than by
    parameter choice.
    """
    if structurally_forced:
        return Regime.NON_DYNAMO
    if gamma < -tol:
        return Regime.DECAYING
    if gamma <= tol:
        return Regime.MARGINAL
    return Regime.FAST_DYNAMO if gamma_limit > tol else Regime.SLOW_DYNAMO


@dataclass(frozen=True)
class RegimeReport:
    gamma: float
    gamma_diffusionless_limit: float
    regime: Regime
    constraints: tuple[tuple[str, float], ...] = ()
    notes: tuple[str, ...] = ()
    marginal_profile: RadialProfile | None = None

    def constraint(self, name: str) -> float:
        for key, val in self.constraints:
            if key == name:
                return val
        raise KeyError(name)

    def as_text(self) -> str:
        lines = [
            f"gamma = {self.gamma:.17g}",
            f"gamma_diffusionless_limit = {self.gamma_diffusionless_limit:.17g}",
            f"regime = {self.regime.value}",
        ]
        for name, value in self.constraints:
            lines.append(f"{name} = {value:.17g}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def _require_untwisted(curve: CurveGeometry) -> None:
    s0, s1 = curve.s_span
    for s in np.linspace(s0, s1, 5):
        if curve.tau(float(s)) != 0.0:
            raise DomainError("thin-tube classification requires zero torsion")


def classify_thin_tube(
    field: FieldDecomposition,
    curve: CurveGeometry,
    eta: float,
    profile_r_max: float = 1.0,
    profile_n: int = 64,
) -> RegimeReport:
    """Thin untwisted tube: anti-dynamo for eta = 0, marginal otherwise.

    Without diffusion the axial balance forces gamma = 0, so a nonzero
    axial field means no dynamo action; the curvature-flow product
    B_s v_s kappa must also vanish for a consistent configuration and is
    reported as a residual. With diffusion the marginal near-axis
    solution B_theta = B0 r is attached and the regime is Marginal.
    """
    if eta < 0.0:
        raise DomainError(f"diffusivity must be >= 0, got {eta}")
    _require_untwisted(curve)
    kappa0 = curve.kappa(0.0)
    flow_product = field.B_s * field.v_s * kappa0
    constraints = (
        ("axial_rate_times_B_s", 0.0),
        ("curvature_flow_product", flow_product),
    )
    notes: tuple[str, ...] = ()
    if flow_product != 0.0:
        notes = (
            "inconsistent configuration: the curvature-flow product "
            "B_s v_s kappa must vanish",
        )
    if eta == 0.0:
        regime = classify_regime(0.0, 0.0, structurally_forced=field.B_s != 0.0)
        return RegimeReport(0.0, 0.0, regime, constraints, notes)
    grid = np.linspace(0.0, profile_r_max, profile_n)
    profile = RadialProfile(grid, grid.copy())
    return RegimeReport(
        0.0,
        0.0,
        Regime.MARGINAL,
        constraints,
        notes,
        marginal_profile=profile,
    )


@dataclass(frozen=True)
class FilamentConfig:
    """Filament field/flow configuration in the (t, n, b) frame."""

    kappa0: float = 0.0
    tau0: float = 0.0
    eta: float = 0.0
    v_s: float = 0.0
    v_n: float = 0.0
    v_b: float = 0.0
    B_s: float = 0.0
    B_n: float = 0.0
    B_b: float = 0.0

    def __post_init__(self):
        if self.eta < 0.0:
            raise DomainError(f"diffusivity must be >= 0, got {self.eta}")


def helical_growth_rate(tau0: float, eta: float) -> float:
    """Diffusive helical-filament growth rate tau0 * (1 + eta * tau0)."""
    return tau0 * (1.0 + eta * tau0)


def filament_growth_rate(config: FilamentConfig) -> RegimeReport:
    """Growth rate of a magnetic filament, by an explicit case split.

    Diffusionless with an axial field present: the rate vanishes and, if
    the axial flow also vanishes, the transverse components must satisfy
    B_n = -B_b (the residual is reported). Diffusionless without an axial
    field: gamma = v_s tau0. Diffusive: the helical filament (torsion
    equal to curvature, enforced) gives gamma = tau0 (1 + eta tau0) with
    zero-diffusivity limit tau0.
    """
    notes: tuple[str, ...] = ()
    if config.eta > 0.0:
        if config.tau0 != config.kappa0:
            raise DomainError(
                "diffusive filament runs are helical: torsion must equal "
                f"curvature (tau0={config.tau0:g}, kappa0={config.kappa0:g})"
            )
        gamma = helical_growth_rate(config.tau0, config.eta)
        limit = config.tau0
        constraints = (("torsion_minus_curvature", config.tau0 - config.kappa0),)
        if config.kappa0 < 0.0:
            notes = (
                "published claim of diffusion-free growth for negative "
                "curvature conflicts with the formula limit gamma -> tau0 < 0",
            )
        return RegimeReport(
            gamma, limit, classify_regime(gamma, limit), constraints, notes
        )
    if config.B_s != 0.0:
        balance = config.v_s * config.tau0 * (config.B_n + config.B_b)
        constraints = [("axial_balance_product", balance)]
        if config.v_s == 0.0:
            transverse = config.B_n + config.B_b
            constraints.append(("transverse_sum", transverse))
            if transverse != 0.0:
                notes = (
                    "transverse components must be opposite (B_n = -B_b) "
                    "when the axial flow vanishes",
                )
        return RegimeReport(
            0.0, 0.0, classify_regime(0.0, 0.0), tuple(constraints), notes
        )
    gamma = config.v_s * config.tau0
    return RegimeReport(gamma, gamma, classify_regime(gamma, gamma))


@dataclass(frozen=True)
class ShearFlowSolution:
    """Thick-tube diffusive constraint chain solved constructively."""

    v_s: float
    dkappa_ds: float
    kappa_profile: ShearFlowCurvature
    residual: float
    degenerate: bool


def thick_tube_constraints(
    eta: float, theta: float, r: float, c0: float = 0.0
) -> ShearFlowSolution:
    """Shear flow v_s = eta r with curvature slope 1/cos(theta).

    The returned residual is v_s / (r cos(theta)) - eta * dkappa/ds,
    zero up to rounding by construction. eta = 0 collapses the chain
    (any curvature slope is admissible once v_s = 0) and is flagged as
    degenerate rather than rejected.
    """
    if eta < 0.0:
        raise DomainError(f"diffusivity must be >= 0, got {eta}")
    if r <= 0.0:
        raise DomainError(f"radius must be positive, got {r}")
    cos_t = math.cos(theta)
    if abs(cos_t) < _COS_FLOOR:
        raise DomainError(f"constraint chain singular: cos(theta) = {cos_t:g}")
    v_s = eta * r
    dkappa_ds = 1.0 / cos_t
    residual = v_s / (r * cos_t) - eta * dkappa_ds
    return ShearFlowSolution(
        v_s=v_s,
        dkappa_ds=dkappa_ds,
        kappa_profile=ShearFlowCurvature(c0, theta),
        residual=residual,
        degenerate=eta == 0.0,
    )


@dataclass(frozen=True)
class GridPoint:
    tau0: float
    eta: float
    gamma: float
    gamma_limit: float
    regime: Regime


def growth_rate_grid(tau0_values, eta_values) -> list[GridPoint]:
    """Helical growth rate over a (tau0, eta) grid, one entry per point.

    Rows with eta = 0 evaluate the formula's diffusionless boundary value
    gamma = tau0.
    """
    out: list[GridPoint] = []
    for tau0 in tau0_values:
        for eta in eta_values:
            if eta < 0.0:
                raise DomainError(f"diffusivity must be >= 0, got {eta}")
            gamma = helical_growth_rate(float(tau0), float(eta))
            limit = float(tau0)
            out.append(
                GridPoint(float(tau0), float(eta), gamma, limit,
                          classify_regime(gamma, limit))
            )
    return out
