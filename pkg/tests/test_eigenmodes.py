"""Bessel kernel accuracy and the radial mode solvers."""

import math

import numpy as np
import pytest

from fluxtube.eigenmodes import (
    RadialProfile,
    bessel_j0,
    bessel_j0_zero,
    solve_poloidal_near_axis,
    solve_toroidal_mode,
)
from fluxtube.errors import ApproximationWarning, DomainError

from helpers import I0_REFERENCE, J0_REFERENCE, J0_ZEROS, j0_series_d1, j0_series_d2


class TestBesselJ0:
    def test_origin_value(self):
        assert bessel_j0(0.0) == 1.0

    def test_against_frozen_references(self):
        for x, ref in J0_REFERENCE.items():
            assert abs(bessel_j0(x) - ref) < 1e-12, f"J0({x}) off"

    def test_even_parity_exact(self):
        xs = np.array([0.3, 1.7, 11.0, 14.5, 23.0, 42.0])
        assert np.array_equal(bessel_j0(xs), bessel_j0(-xs))

    def test_dense_scan_against_ode(self):
        # Series-branch check: the differentiated power series (independent
        # test-local code) must satisfy x y'' + y' + x y = 0 together with
        # the package evaluation of y.
        x = np.linspace(0.1, 15.9, 159).astype(np.longdouble)
        y = bessel_j0(x)
        residual = x * j0_series_d2(x) + j0_series_d1(x) + x * y
        assert float(np.max(np.abs(residual))) < 1e-8

    def test_asymptotic_branch_ode_residual(self):
        # Central differences at step 1e-4 in extended precision; the
        # tolerance sits at the noise floor 4 eps_f / h^2 * x of the
        # asymptotic branch near the series handover.
        x = np.linspace(16.5, 40.0, 95).astype(np.longdouble)
        h = np.longdouble(1e-4)
        y = bessel_j0(x)
        d1 = (bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h)
        d2 = (bessel_j0(x + h) - 2.0 * y + bessel_j0(x - h)) / (h * h)
        residual = x * d2 + d1 + x * y
        assert float(np.max(np.abs(residual))) < 3e-5

    def test_first_zero_by_bisection(self):
        zero = bessel_j0_zero(1)
        assert abs(zero - J0_ZEROS[0]) < 1e-12
        assert abs(bessel_j0(zero)) < 1e-10

    def test_higher_zeros(self):
        for k, ref in enumerate(J0_ZEROS, start=1):
            assert abs(bessel_j0_zero(k) - ref) < 1e-11

    def test_scalar_type(self):
        assert isinstance(bessel_j0(1.5), float)
        out = bessel_j0(np.array([1.0, 2.0]))
        assert out.dtype == np.float64


class TestToroidalMode:
    def test_decaying_matches_j0(self):
        profile = solve_toroidal_mode(-1.0, 1.0, 5.0, 251)  # spacing 0.02
        closed = bessel_j0(profile.r_grid)
        assert float(np.max(np.abs(profile.values - closed))) < 1e-6
        for x in (0.5, 1.0, 2.0, 3.0):
            idx = int(round(x / profile.spacing))
            assert profile.values[idx] == pytest.approx(J0_REFERENCE[x], abs=1e-6)

    def test_marginal_is_constant(self):
        profile = solve_toroidal_mode(0.0, 0.7, 5.0, 64)
        assert np.array_equal(profile.values, np.ones(64))

    def test_growing_mode_shape_and_i0(self):
        profile = solve_toroidal_mode(1.0, 1.0, 3.0, 301)
        assert float(np.min(profile.values)) >= 1.0 - 1e-12
        diffs = np.diff(profile.values)
        assert float(np.min(diffs)) > 0.0
        assert float(np.min(np.diff(diffs))) > 0.0  # convex
        for x, ref in I0_REFERENCE.items():
            idx = int(round(x / profile.spacing))
            assert profile.values[idx] == pytest.approx(ref, abs=1e-6)

    def test_operator_residual_on_grid(self):
        profile = solve_toroidal_mode(-1.0, 1.0, 5.0, 2001)
        b = profile.values
        r = profile.r_grid
        dr = profile.spacing
        lap = (b[2:] - 2.0 * b[1:-1] + b[:-2]) / dr**2 + (b[2:] - b[:-2]) / (
            2.0 * dr * r[1:-1]
        )
        residual = lap - (-1.0 / 1.0) * b[1:-1]
        assert float(np.max(np.abs(residual))) < 1e-6 * float(np.max(np.abs(b)))

    def test_zero_locations(self):
        gamma, eta = -2.0, 0.5
        profile = solve_toroidal_mode(gamma, eta, 5.0, 800)
        scale = math.sqrt(eta / -gamma)
        signs = np.sign(profile.values)
        flips = np.nonzero(signs[:-1] * signs[1:] < 0.0)[0]
        expected = [scale * z for z in J0_ZEROS if scale * z < 5.0]
        assert len(flips) == len(expected)
        for idx, zero in zip(flips, expected):
            assert abs(profile.r_grid[idx] - zero) <= profile.spacing

    def test_scaling_invariance(self):
        base = solve_toroidal_mode(-1.0, 1.0, 5.0, 128)
        power_of_two = solve_toroidal_mode(-4.0, 4.0, 5.0, 128)
        assert np.array_equal(base.values, power_of_two.values)
        generic = solve_toroidal_mode(-3.0, 3.0, 5.0, 128)
        assert np.allclose(base.values, generic.values, rtol=0.0, atol=1e-10)

    def test_validation(self):
        with pytest.raises(DomainError):
            solve_toroidal_mode(-1.0, 0.0, 5.0, 64)
        with pytest.raises(DomainError):
            solve_toroidal_mode(-1.0, -1.0, 5.0, 64)
        with pytest.raises(DomainError):
            solve_toroidal_mode(-1.0, 1.0, 5.0, 8)


class TestRadialProfile:
    def test_rejects_nonuniform_grid(self):
        grid = np.concatenate([np.linspace(0.0, 1.0, 15), [1.2]])
        with pytest.raises(DomainError):
            RadialProfile(grid, np.zeros(16))

    def test_rejects_short_grid(self):
        with pytest.raises(DomainError):
            RadialProfile(np.linspace(0.0, 1.0, 8), np.zeros(8))


class TestPoloidalNearAxis:
    def test_marginal_solution_value(self):
        out = solve_poloidal_near_axis(1.0, 0.0, 1.0, 0.3)
        assert out.value == pytest.approx(0.3, abs=1e-15)

    def test_zero_amplitude(self):
        for r in (0.0, 0.2, 1.0):
            assert solve_poloidal_near_axis(0.0, 0.0, 1.0, r).value == 0.0

    def test_marginal_residual_exact(self):
        out = solve_poloidal_near_axis(2.0, 0.0, 1.0, 0.5)
        assert out.value == 1.0
        assert out.marginal_residual == 0.0
        assert out.full_residual == 0.0

    def test_full_residual_tracks_growth_term(self):
        out = solve_poloidal_near_axis(1.0, 0.5, 2.0, 0.2)
        # full residual: B0 - (gamma r / eta + 1/r) B0 r = -gamma B0 r^2/eta
        assert out.full_residual == pytest.approx(-0.5 * 0.04 / 2.0, rel=1e-12)

    def test_approximation_warning(self):
        with pytest.warns(ApproximationWarning):
            out = solve_poloidal_near_axis(1.0, 5.0, 1.0, 1.0)
        assert not out.within_approximation

    def test_origin(self):
        out = solve_poloidal_near_axis(3.0, 1.0, 1.0, 0.0)
        assert out.value == 0.0 and out.marginal_residual == 0.0
