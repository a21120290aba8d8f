#!/usr/bin/env python3
"""Benchmark the compiled stepping kernels against the pure-Python twins.

Times the radial diffusion stepper and the frame-transport RK4 loop on
both backends, reports the speedup, and verifies that the trajectories
agree bit for bit.

Usage: python benchmarks/benchmark_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from fluxtube import backend
from fluxtube.eigenmodes import bessel_j0, bessel_j0_zero


def _time(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_diffusion(kernels, repeats):
    n = 201
    steps = 20000
    r = np.linspace(0.0, 1.0, n)
    values = bessel_j0(bessel_j0_zero(1) * r)
    dr = r[1] - r[0]
    coef = 1e-6

    def run():
        return kernels.diffusion_evolve(
            values, r, dr, dr * dr, 1.0 / (2.0 * dr), coef, steps, 0, 0
        )

    elapsed, (final, energies) = _time(run, repeats)
    return elapsed, final


def bench_frenet(kernels, repeats):
    steps = 100000
    y0 = np.array([1.0, 0, 0, 0, 1.0, 0, 0, 0, 1.0, 0, 0, 0])
    h = 20.0 / steps

    def run():
        return kernels.frenet_transport(y0, 0.0, h, steps, 1.0, 0.05, 0.5, 0.0, 100)

    elapsed, traj = _time(run, repeats)
    return elapsed, traj


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    names = backend.available_backends()
    print(f"available backends: {', '.join(names)}")
    if "compiled" not in names:
        print("compiled extension not built; nothing to compare")
        return

    cases = [
        ("diffusion (n=201, 20k steps)", bench_diffusion),
        ("frenet RK4 (100k steps)", bench_frenet),
    ]
    print(f"{'kernel':<30} {'compiled':>10} {'python':>10} {'speedup':>8}  match")
    for label, fn in cases:
        tc, out_c = fn(backend.get_kernels("compiled"), args.repeats)
        tp, out_p = fn(backend.get_kernels("python"), args.repeats)
        match = "bitwise" if np.array_equal(out_c, out_p) else "DIFFERS"
        print(f"{label:<30} {tc * 1e3:>8.1f}ms {tp * 1e3:>8.1f}ms "
              f"{tp / tc:>7.1f}x  {match}")


if __name__ == "__main__":
    main()
