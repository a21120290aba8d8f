"""Regime taxonomy and the analytic decision rules."""

import math

import numpy as np
import pytest

from fluxtube.classifier import (
    FilamentConfig,
    Regime,
    classify_regime,
    classify_thin_tube,
    filament_growth_rate,
    growth_rate_grid,
    helical_growth_rate,
    thick_tube_constraints,
)
from fluxtube.errors import DomainError
from fluxtube.frenet import CurveGeometry
from fluxtube.induction import FieldDecomposition


def _curve(kappa=0.0, tau=0.0):
    return CurveGeometry(kappa=kappa, tau=tau, s_span=(0.0, 1.0))


class TestTaxonomy:
    def test_total_and_deterministic(self):
        rng = np.random.default_rng(41)
        values = list(rng.uniform(-3, 3, 50)) + [0.0, 1e-13, -1e-13, 1e-11, -1e-11]
        for gamma in values:
            for limit in values:
                a = classify_regime(gamma, limit)
                b = classify_regime(gamma, limit)
                assert a is b
                assert isinstance(a, Regime)

    def test_band_edges(self):
        assert classify_regime(0.0, 0.0) is Regime.MARGINAL
        assert classify_regime(1e-13, 1.0) is Regime.MARGINAL
        assert classify_regime(-1e-13, -1.0) is Regime.MARGINAL
        assert classify_regime(-1e-6, 0.0) is Regime.DECAYING
        assert classify_regime(1e-6, 1e-6) is Regime.FAST_DYNAMO
        assert classify_regime(1e-6, 0.0) is Regime.SLOW_DYNAMO
        assert classify_regime(0.0, 0.0, structurally_forced=True) is Regime.NON_DYNAMO


class TestThinTube:
    def test_flat_axis_no_dynamo(self):
        field = FieldDecomposition(B_s=1.0, v_s=1.0)
        report = classify_thin_tube(field, _curve(kappa=0.0), eta=0.0)
        assert report.gamma == 0.0
        assert report.regime is Regime.NON_DYNAMO
        assert report.constraint("curvature_flow_product") == 0.0

    def test_inconsistent_configuration_flagged(self):
        field = FieldDecomposition(B_s=1.0, v_s=2.0)
        report = classify_thin_tube(field, _curve(kappa=0.5), eta=0.0)
        assert report.constraint("curvature_flow_product") == 1.0
        assert report.notes

    def test_diffusive_marginal_profile(self):
        field = FieldDecomposition(B_theta=1.0)
        report = classify_thin_tube(field, _curve(), eta=0.1)
        assert report.regime is Regime.MARGINAL
        prof = report.marginal_profile
        assert prof is not None
        assert np.array_equal(prof.values, prof.r_grid)  # B ~ B0 r with B0 = 1

    def test_zero_axial_field_is_marginal_not_forced(self):
        field = FieldDecomposition(B_s=0.0)
        report = classify_thin_tube(field, _curve(), eta=0.0)
        assert report.regime is Regime.MARGINAL

    def test_torsion_rejected(self):
        field = FieldDecomposition(B_s=1.0)
        with pytest.raises(DomainError):
            classify_thin_tube(field, _curve(tau=0.5), eta=0.0)

    def test_randomized_sweep_always_non_dynamo(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            field = FieldDecomposition(
                B_s=rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0]),
                v_s=rng.uniform(-3.0, 3.0),
                B_theta=rng.uniform(-3.0, 3.0),
                omega0=rng.uniform(-3.0, 3.0),
            )
            kappa = rng.uniform(-2.0, 2.0)
            report = classify_thin_tube(field, _curve(kappa=kappa), eta=0.0)
            assert report.gamma == 0.0
            assert report.regime is Regime.NON_DYNAMO
            assert report.constraint("curvature_flow_product") == (
                field.B_s * field.v_s * kappa
            )


class TestFilament:
    def test_axial_field_forces_marginal(self):
        report = filament_growth_rate(
            FilamentConfig(B_s=1.0, v_s=2.0, tau0=0.7, v_n=0.3)
        )
        assert report.gamma == 0.0
        assert report.regime is Regime.MARGINAL

    def test_transverse_balance_when_flow_vanishes(self):
        report = filament_growth_rate(
            FilamentConfig(B_s=1.0, v_s=0.0, tau0=0.7, B_n=2.0, B_b=-2.0)
        )
        assert report.constraint("transverse_sum") == 0.0
        assert not report.notes
        report = filament_growth_rate(
            FilamentConfig(B_s=1.0, v_s=0.0, tau0=0.7, B_n=2.0, B_b=1.0)
        )
        assert report.constraint("transverse_sum") == 3.0
        assert report.notes

    def test_poloidal_driven_rate(self):
        report = filament_growth_rate(FilamentConfig(B_s=0.0, v_s=3.0, tau0=0.5))
        assert report.gamma == 1.5
        assert report.gamma_diffusionless_limit == 1.5
        assert report.regime is Regime.FAST_DYNAMO

    def test_pure_poloidal_flow_cannot_drive(self):
        rng = np.random.default_rng(43)
        for _ in range(50):
            report = filament_growth_rate(
                FilamentConfig(
                    B_s=0.0, v_s=0.0, tau0=rng.uniform(-3, 3),
                    v_n=rng.uniform(-2, 2), v_b=rng.uniform(-2, 2),
                )
            )
            assert report.gamma == 0.0
            assert report.regime is Regime.MARGINAL

    def test_helical_slow_dynamo(self):
        report = filament_growth_rate(FilamentConfig(kappa0=-2.0, tau0=-2.0, eta=1.0))
        assert report.gamma == 2.0
        assert report.gamma_diffusionless_limit == -2.0
        assert report.regime is Regime.SLOW_DYNAMO
        assert report.notes  # published-claim disagreement flagged

    def test_helical_zero_torsion_marginal(self):
        report = filament_growth_rate(FilamentConfig(kappa0=0.0, tau0=0.0, eta=1.0))
        assert report.gamma == 0.0
        assert report.regime is Regime.MARGINAL

    def test_helical_mismatch_rejected(self):
        with pytest.raises(DomainError):
            filament_growth_rate(FilamentConfig(kappa0=1.0, tau0=2.0, eta=0.5))


class TestThickTubeConstraints:
    def test_flat_angle_example(self):
        out = thick_tube_constraints(eta=1.0, theta=0.0, r=2.0)
        assert out.v_s == 2.0
        assert out.dkappa_ds == 1.0
        assert out.kappa_profile(1.0) == 1.0  # kappa(s) = s + c0, c0 = 0
        assert out.residual == 0.0
        assert not out.degenerate

    def test_oblique_angle(self):
        out = thick_tube_constraints(eta=2.0, theta=math.pi / 3.0, r=1.0)
        assert out.v_s == 2.0
        assert out.dkappa_ds == pytest.approx(2.0, rel=1e-15)
        assert abs(out.residual) < 1e-12

    def test_integration_constant(self):
        out = thick_tube_constraints(eta=1.0, theta=0.0, r=1.0, c0=4.0)
        assert out.kappa_profile(0.0) == 4.0

    def test_degenerate_zero_diffusivity(self):
        out = thick_tube_constraints(eta=0.0, theta=0.0, r=1.0)
        assert out.v_s == 0.0
        assert out.degenerate
        assert out.residual == 0.0

    def test_singular_angle_rejected(self):
        with pytest.raises(DomainError):
            thick_tube_constraints(eta=1.0, theta=math.pi / 2.0, r=1.0)

    def test_negative_inputs_rejected(self):
        with pytest.raises(DomainError):
            thick_tube_constraints(eta=-1.0, theta=0.0, r=1.0)
        with pytest.raises(DomainError):
            thick_tube_constraints(eta=1.0, theta=0.0, r=0.0)

    def test_residual_floor_randomized(self):
        rng = np.random.default_rng(44)
        for _ in range(100):
            eta = rng.uniform(0.0, 3.0)
            r = rng.uniform(0.1, 5.0)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            if abs(math.cos(theta)) < 0.1:
                theta = 0.3
            out = thick_tube_constraints(eta, theta, r)
            scale = max(1.0, abs(eta / math.cos(theta)))
            assert abs(out.residual) <= 1e-12 * scale


class TestGrowthRateGrid:
    def test_sign_boundaries(self):
        tau_axis = np.linspace(-3.0, 3.0, 50)
        eta_axis = np.linspace(0.0, 2.0, 50)
        grid = growth_rate_grid(tau_axis, eta_axis)
        assert len(grid) == 2500
        gamma = np.array([g.gamma for g in grid]).reshape(50, 50)
        signs = np.sign(gamma)
        tau = np.array([g.tau0 for g in grid]).reshape(50, 50)
        eta = np.array([g.eta for g in grid]).reshape(50, 50)
        factor = 1.0 + eta * tau
        for axis in (0, 1):
            flip = np.diff(signs, axis=axis) != 0.0
            tau_flip = np.diff(np.sign(tau), axis=axis) != 0.0
            fac_flip = np.diff(np.sign(factor), axis=axis) != 0.0
            assert np.all(~flip | tau_flip | fac_flip)

    def test_reference_point(self):
        assert helical_growth_rate(-2.0, 1.0) == 2.0
        grid = growth_rate_grid([-2.0], [1.0])
        assert grid[0].regime is Regime.SLOW_DYNAMO
