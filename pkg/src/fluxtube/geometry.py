"""Flux-tube metrics and numerically computed curvature tensors.

Two diagonal metric families on tube coordinates (r, theta, s) are
supported: the thin tube diag(1, r^2, 1) and the thick tube
diag(1, r^2, K^2) with K^2 = 1 - r * kappa(s) * cos(theta).

Christoffel symbols and the Riemann tensor are obtained from finite
differences of the metric components alone, never from closed forms, so
they act as an independent oracle against published curvature claims.
First derivatives use 4th-order central stencils; second derivatives use
the 4th-order pure stencil on-axis and nested first differences for the
mixed terms. Derivatives of the Christoffel symbols are assembled by the
product rule from metric derivatives, which keeps round-off noise at the
1e-10 level instead of amplifying it through difference-of-difference of
already-noisy symbols.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .profiles import ConstantProfile, Profile, ShearFlowCurvature, as_profile

#: Default relative step for metric finite differences. Balances 4th-order
#: truncation against round-off; per-coordinate steps are h*r in the radial
#: direction, h in theta and h*max(1, |s|) along the axis.
DEFAULT_STEP = 5e-3

_TWO_PI = 2.0 * math.pi


class MetricFamily(enum.Enum):
    THIN = "thin"
    THICK = "thick"


@dataclass(frozen=True)
class CoordPoint:
    """Point in tube coordinates; theta is reduced to [0, 2*pi)."""

    r: float
    theta: float
    s: float

    def __post_init__(self):
        if not (self.r >= 0.0):
            raise DomainError(f"radial coordinate must be >= 0, got {self.r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", float(self.theta) % _TWO_PI)
        object.__setattr__(self, "s", float(self.s))

    def as_array(self) -> np.ndarray:
        return np.array([self.r, self.theta, self.s])


@dataclass(frozen=True)
class TubeMetric:
    """Diagonal tube metric; kappa is ignored by the thin family."""

    family: MetricFamily
    kappa: Profile = field(default_factory=lambda: ConstantProfile(0.0))

    def __post_init__(self):
        object.__setattr__(self, "kappa", as_profile(self.kappa))


def thin_tube(kappa=0.0) -> TubeMetric:
    return TubeMetric(MetricFamily.THIN, as_profile(kappa))


def thick_tube(kappa) -> TubeMetric:
    return TubeMetric(MetricFamily.THICK, as_profile(kappa))


def squared_axis_factor(metric: TubeMetric, r: float, theta: float, s: float) -> float:
    """K^2 for the metric at raw coordinates (1.0 for the thin family)."""
    if metric.family is MetricFamily.THIN:
        return 1.0
    return 1.0 - r * metric.kappa(s) * math.cos(theta)


def metric_components(metric: TubeMetric, r: float, theta: float, s: float) -> np.ndarray:
    """Diagonal components (g_rr, g_thth, g_ss) at raw coordinates.

    Raises DomainError for r < 0 or a degenerate thick-tube factor, which
    also guards every stencil evaluation performed by the tensor routines.
    """
    if r < 0.0:
        raise DomainError(f"radial coordinate must be >= 0, got {r}")
    if metric.family is MetricFamily.THIN:
        g_ss = 1.0
    else:
        g_ss = 1.0 - r * metric.kappa(s) * math.cos(theta)
        if g_ss <= 0.0:
            raise DomainError(
                f"thick-tube metric degenerate at (r={r:g}, theta={theta:g}, "
                f"s={s:g}): K^2={g_ss:g} <= 0"
            )
    return np.array([1.0, r * r, g_ss])


def eval_metric(metric: TubeMetric, p: CoordPoint) -> np.ndarray:
    """Metric as a symmetric 3x3 matrix at p."""
    return np.diag(metric_components(metric, p.r, p.theta, p.s))


@dataclass(frozen=True)
class ChristoffelTensor:
    """Gamma^i_jk at a point, symmetric in the lower indices by construction."""

    values: np.ndarray  # shape (3, 3, 3), index order [upper, lower1, lower2]
    point: CoordPoint
    step: float


@dataclass(frozen=True)
class RiemannTensor:
    """Fully lowered components R_ijkl at a point."""

    values: np.ndarray  # shape (3, 3, 3, 3)
    point: CoordPoint
    step: float


def _coordinate_steps(x: np.ndarray, h: float) -> np.ndarray:
    return np.array([h * x[0], h, h * max(1.0, abs(x[2]))])


def _d1(comps, x, c, hc):
    """4th-order central first derivative of the component vector."""
    e = np.zeros(3)
    e[c] = 1.0
    return (
        -comps(x + 2.0 * hc * e)
        + 8.0 * comps(x + hc * e)
        - 8.0 * comps(x - hc * e)
        + comps(x - 2.0 * hc * e)
    ) / (12.0 * hc)


def _d2_pure(comps, x, c, hc):
    """4th-order central second derivative along a single coordinate."""
    e = np.zeros(3)
    e[c] = 1.0
    return (
        -comps(x + 2.0 * hc * e)
        + 16.0 * comps(x + hc * e)
        - 30.0 * comps(x)
        + 16.0 * comps(x - hc * e)
        - comps(x - 2.0 * hc * e)
    ) / (12.0 * hc * hc)


def _d2_mixed(comps, x, a, b, ha, hb):
    """Nested 4th-order first differences; symmetric in (a, b) by evaluation."""
    eb = np.zeros(3)
    eb[b] = 1.0

    def inner(y):
        return (
            -comps(y + 2.0 * hb * eb)
            + 8.0 * comps(y + hb * eb)
            - 8.0 * comps(y - hb * eb)
            + comps(y - 2.0 * hb * eb)
        ) / (12.0 * hb)

    ea = np.zeros(3)
    ea[a] = 1.0
    return (
        -inner(x + 2.0 * ha * ea)
        + 8.0 * inner(x + ha * ea)
        - 8.0 * inner(x - ha * ea)
        + inner(x - 2.0 * ha * ea)
    ) / (12.0 * ha)


def _metric_derivatives(comps, x, h):
    """g, g^-1, dg[c,i,j] and d2g[a,b,i,j] from stencil evaluations."""
    g = np.diag(comps(x))
    try:
        ginv = np.linalg.inv(g)
    except np.linalg.LinAlgError as exc:
        raise DomainError(f"metric degenerate at {x}: {exc}") from exc
    hs = _coordinate_steps(x, h)
    if hs[0] <= 0.0:
        raise DomainError("curvature evaluation requires r > 0")
    dg = np.zeros((3, 3, 3))
    d2g = np.zeros((3, 3, 3, 3))
    for c in range(3):
        dg[c] = np.diag(_d1(comps, x, c, hs[c]))
        d2g[c, c] = np.diag(_d2_pure(comps, x, c, hs[c]))
    for a in range(3):
        for b in range(a + 1, 3):
            m = np.diag(_d2_mixed(comps, x, a, b, hs[a], hs[b]))
            d2g[a, b] = m
            d2g[b, a] = m
    return g, ginv, dg, d2g


def _christoffel_values(ginv, dg):
    """Levi-Civita symbols 0.5*g^im (dg_mk/dx^j + dg_mj/dx^k - dg_jk/dx^m)."""
    gam = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(j, 3):
                v = 0.0
                for m in range(3):
                    v += ginv[i, m] * (dg[j][m, k] + dg[k][m, j] - dg[m][j, k])
                gam[i, j, k] = 0.5 * v
                gam[i, k, j] = 0.5 * v
    return gam


def _christoffel_derivatives(ginv, dg, d2g):
    """dGamma[c,i,j,k] by the product rule, using d(g^-1) = -g^-1 dg g^-1."""
    dginv = np.empty((3, 3, 3))
    for c in range(3):
        dginv[c] = -ginv @ dg[c] @ ginv
    dgam = np.zeros((3, 3, 3, 3))
    for c in range(3):
        for i in range(3):
            for j in range(3):
                for k in range(j, 3):
                    v = 0.0
                    for m in range(3):
                        v += dginv[c][i, m] * (dg[j][m, k] + dg[k][m, j] - dg[m][j, k])
                        v += ginv[i, m] * (
                            d2g[c, j][m, k] + d2g[c, k][m, j] - d2g[c, m][j, k]
                        )
                    dgam[c, i, j, k] = 0.5 * v
                    dgam[c, i, k, j] = 0.5 * v
    return dgam


def _riemann_lowered(g, gam, dgam):
    """R^i_jkl = dGamma^i_jl/dx^k - dGamma^i_jk/dx^l + Gamma Gamma terms, lowered."""
    rup = np.empty((3, 3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    v = dgam[k, i, j, l] - dgam[l, i, j, k]
                    for m in range(3):
                        v += gam[i, k, m] * gam[m, j, l] - gam[i, l, m] * gam[m, j, k]
                    rup[i, j, k, l] = v
    return np.einsum("im,mjkl->ijkl", g, rup)


def _components_function(metric: TubeMetric):
    def comps(x):
        return metric_components(metric, x[0], x[1], x[2])

    return comps


def christoffel(metric: TubeMetric, p: CoordPoint, h: float | None = None) -> ChristoffelTensor:
    """Christoffel symbols at p from finite differences of the metric."""
    h = DEFAULT_STEP if h is None else float(h)
    if h <= 0.0:
        raise DomainError(f"step must be positive, got {h}")
    comps = _components_function(metric)
    x = p.as_array()
    _, ginv, dg, _ = _metric_derivatives(comps, x, h)
    return ChristoffelTensor(_christoffel_values(ginv, dg), p, h)


def riemann(metric: TubeMetric, p: CoordPoint, h: float | None = None) -> RiemannTensor:
    """Fully lowered Riemann tensor at p from finite differences of the metric."""
    h = DEFAULT_STEP if h is None else float(h)
    if h <= 0.0:
        raise DomainError(f"step must be positive, got {h}")
    comps = _components_function(metric)
    x = p.as_array()
    g, ginv, dg, d2g = _metric_derivatives(comps, x, h)
    gam = _christoffel_values(ginv, dg)
    dgam = _christoffel_derivatives(ginv, dg, d2g)
    return RiemannTensor(_riemann_lowered(g, gam, dgam), p, h)


@dataclass(frozen=True)
class ComparisonRow:
    """One oracle-versus-published-form comparison at a point."""

    point: CoordPoint
    component: str
    oracle: float
    form_1: float
    form_2: float
    rel_dev_1: float
    rel_dev_2: float


def _relative_deviation(oracle: float, form: float) -> float:
    d = abs(oracle - form)
    if d == 0.0:
        return 0.0
    return d / max(abs(oracle), abs(form))


def _row(point, component, oracle, form_1, form_2) -> ComparisonRow:
    return ComparisonRow(
        point,
        component,
        float(oracle),
        float(form_1),
        float(form_2),
        _relative_deviation(oracle, form_1),
        _relative_deviation(oracle, form_2),
    )


def curvature_comparison(
    metric: TubeMetric, points, h: float | None = None
) -> list[ComparisonRow]:
    """Compare oracle R_1313 and R_2323 against the published closed forms.

    For each point two rows are emitted: R_1313 against -K^4/(2 r^2) and
    -r^2 kappa^4 cos^2(theta)/2 (two published forms that disagree in
    general), and R_2323 against -K^2 (duplicated in both form columns).
    When the metric carries a shear-flow curvature profile, two further
    rows compare against the published specializations for linear kappa:
    -r^2 s^4 cos^6(theta)/2 and -r^2.

    Deviations are reported, never asserted; the oracle is authoritative.
    """
    rows: list[ComparisonRow] = []
    shear = isinstance(metric.kappa, ShearFlowCurvature)
    for p in points:
        ten = riemann(metric, p, h)
        r_1313 = ten.values[0, 2, 0, 2]
        r_2323 = ten.values[1, 2, 1, 2]
        k2 = squared_axis_factor(metric, p.r, p.theta, p.s)
        kap = metric.kappa(p.s)
        cos_t = math.cos(p.theta)
        quartic = -(k2 * k2) / (2.0 * p.r * p.r) if p.r > 0.0 else math.nan
        in_kappa = -0.5 * p.r * p.r * kap**4 * cos_t * cos_t
        rows.append(_row(p, "R_1313", r_1313, quartic, in_kappa))
        rows.append(_row(p, "R_2323", r_2323, -k2, -k2))
        if shear:
            lin_1313 = -0.5 * p.r * p.r * p.s**4 * cos_t**6
            lin_2323 = -(p.r * p.r)
            rows.append(_row(p, "R_1313_linear_kappa", r_1313, lin_1313, lin_1313))
            rows.append(_row(p, "R_2323_linear_kappa", r_2323, lin_2323, lin_2323))
    return rows
