"""Backend selection and compiled-versus-pure kernel equivalence."""

import numpy as np
import pytest

from fluxtube import backend
from fluxtube.eigenmodes import bessel_j0, bessel_j0_zero

HAVE_COMPILED = "compiled" in backend.available_backends()

needs_compiled = pytest.mark.skipif(
    not HAVE_COMPILED, reason="compiled extension not built"
)


class TestSelection:
    def test_python_backend_always_available(self):
        assert "python" in backend.available_backends()
        assert backend.get_kernels("python").NAME == "python"

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            backend.get_kernels("fortran")

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("FLUXTUBE_BACKEND", "python")
        assert backend.default_backend() == "python"
        monkeypatch.setenv("FLUXTUBE_BACKEND", "nonsense")
        with pytest.raises(RuntimeError):
            backend.default_backend()

    @needs_compiled
    def test_compiled_preferred_by_default(self, monkeypatch):
        monkeypatch.delenv("FLUXTUBE_BACKEND", raising=False)
        assert backend.default_backend() == "compiled"


@needs_compiled
class TestTwinEquivalence:
    def _diffusion_inputs(self):
        n = 101
        r = np.linspace(0.0, 1.0, n)
        rng = np.random.default_rng(51)
        values = bessel_j0(bessel_j0_zero(1) * r) + 0.01 * rng.standard_normal(n)
        dr = r[1] - r[0]
        return values, r, dr, dr * dr, 1.0 / (2.0 * dr), 2e-5

    @pytest.mark.parametrize("component", [0, 1])
    @pytest.mark.parametrize("boundary", [0, 1])
    def test_diffusion_fields_bitwise_equal(self, component, boundary):
        values, r, dr, dr2, inv_2dr, coef = self._diffusion_inputs()
        if component == 1:
            values = values.copy()
            values[0] = 0.0
        kc = backend.get_kernels("compiled")
        kp = backend.get_kernels("python")
        fc, ec = kc.diffusion_evolve(values, r, dr, dr2, inv_2dr, coef, 2000,
                                     component, boundary)
        fp, ep = kp.diffusion_evolve(values, r, dr, dr2, inv_2dr, coef, 2000,
                                     component, boundary)
        assert np.array_equal(fc, fp)
        # Summation order differs (sequential vs pairwise): tiny slack only.
        assert np.allclose(ec, ep, rtol=1e-12, atol=0.0)

    def test_frenet_trajectories_bitwise_equal(self):
        y0 = np.array([1.0, 0, 0, 0, 1.0, 0, 0, 0, 1.0, 0, 0, 0])
        args = (y0, 0.0, 2.0 * np.pi / 10000, 10000, 1.0, 0.1, 0.5, -0.02, 100)
        tc = backend.get_kernels("compiled").frenet_transport(*args)
        tp = backend.get_kernels("python").frenet_transport(*args)
        assert np.array_equal(tc, tp)

    def test_evolution_module_respects_backend_argument(self):
        from fluxtube.eigenmodes import RadialProfile
        from fluxtube.evolution import EvolutionConfig, evolve

        config = EvolutionConfig(eta=1.0, n=64, dt=2e-5, steps=500)
        grid = config.grid()
        init = RadialProfile(grid, bessel_j0(bessel_j0_zero(1) * grid))
        a = evolve(config, init, backend_name="compiled")
        b = evolve(config, init, backend_name="python")
        assert np.array_equal(a.final.values, b.final.values)
