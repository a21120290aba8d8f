"""Curved flux-tube dynamo analysis toolkit.

Metric and curvature oracles, frame transport, induction operators,
radial eigenmodes, a diffusion time-stepper, and dynamo-regime
classification, exposed as a library and through the `fluxtube` CLI.
"""

from . import backend
from .classifier import (
    FilamentConfig,
    Regime,
    RegimeReport,
    classify_regime,
    classify_thin_tube,
    filament_growth_rate,
    growth_rate_grid,
    helical_growth_rate,
    thick_tube_constraints,
)
from .eigenmodes import (
    RadialProfile,
    bessel_j0,
    bessel_j0_zero,
    solve_poloidal_near_axis,
    solve_toroidal_mode,
)
from .errors import (
    ApproximationWarning,
    ConfigError,
    ConsistencyError,
    DomainError,
    StabilityError,
)
from .evolution import (
    Boundary,
    Component,
    EvolutionConfig,
    EvolutionResult,
    evolve,
    measure_growth_rate,
)
from .frenet import (
    CurveGeometry,
    FrenetFrame,
    frame_derivative_terms,
    transport_frame,
)
from .geometry import (
    CoordPoint,
    MetricFamily,
    TubeMetric,
    christoffel,
    curvature_comparison,
    eval_metric,
    riemann,
    thick_tube,
    thin_tube,
)
from .induction import (
    ConstraintReport,
    FieldDecomposition,
    RadialField,
    constraint_checks,
    stretching_term,
    thin_tube_residuals,
    tube_laplacian,
)
from .profiles import (
    ConstantProfile,
    LinearProfile,
    Profile,
    ShearFlowCurvature,
    as_profile,
)

__version__ = "0.1.0"
