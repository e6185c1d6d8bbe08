#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the two hot kernels at tracker-realistic sizes, then a full tracking
run under each backend (forced via TBDBP_KERNELS for the subprocess).

Usage: python benchmarks/bench_kernels.py [--runs 3]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from tbdbp.kernels import get_backend


def time_callable(fn, repeats=7):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(n_particles=3000, n_cells=60):
    # tracker-realistic values: a particle cloud with its gated cells within
    # a few meters, kernel coefficients in the normal floating-point range
    rng = np.random.default_rng(0)
    px = 16.0 + 0.2 * rng.standard_normal(n_particles)
    py = 16.0 + 0.2 * rng.standard_normal(n_particles)
    gamma = rng.uniform(0, 120, n_particles)
    angles = rng.uniform(0, 2 * np.pi, n_cells)
    radii = 4.3 * np.sqrt(rng.uniform(0, 1, n_cells))
    cx = 16.0 + radii * np.cos(angles)
    cy = 16.0 + radii * np.sin(angles)
    z_sq = rng.uniform(0, 60, n_cells)
    base = rng.uniform(1, 10, n_cells)

    rows = []
    backends = {}
    for name in ("reference", "native"):
        try:
            backends[name] = get_backend(name)
        except ImportError:
            print(f"backend {name!r} unavailable; skipping")
    for name, impl in backends.items():
        coeff = impl.psf_coeff(px, py, gamma, cx, cy, 0.5)
        t_coeff = time_callable(lambda: impl.psf_coeff(px, py, gamma, cx, cy, 0.5))
        t_kappa = time_callable(lambda: impl.kappa_iso(z_sq, base, coeff, 2))
        rows.append((name, t_coeff, t_kappa))

    print(f"\nkernel microbenchmarks ({n_particles} particles x {n_cells} cells, best of 7):")
    print(f"{'backend':<12}{'psf_coeff':>12}{'kappa_iso':>12}")
    for name, t_coeff, t_kappa in rows:
        print(f"{name:<12}{t_coeff * 1e3:>10.2f}ms{t_kappa * 1e3:>10.2f}ms")
    if len(rows) == 2:
        print(
            f"{'speedup':<12}{rows[0][1] / rows[1][1]:>11.2f}x{rows[0][2] / rows[1][2]:>11.2f}x"
        )
    return [r[0] for r in rows]


TRACK_SNIPPET = """
import tempfile, time
from pathlib import Path
from tbdbp.cli import simulate_one, track_one
from tbdbp.runconfig import build_run_config, load_mapping

mapping = load_mapping(None)
mapping["scenario.steps"] = "25"
cfg = build_run_config(mapping)
with tempfile.TemporaryDirectory() as td:
    td = Path(td)
    simulate_one(cfg, 0, td)
    t0 = time.perf_counter()
    track_one(cfg, 0, td)
    print(f"{time.perf_counter() - t0:.3f}")
"""


def bench_end_to_end(backends, runs):
    print(f"\nend-to-end tracking (25 steps, default scenario, best of {runs}):")
    for name in backends:
        env = dict(os.environ, TBDBP_KERNELS=name)
        best = np.inf
        for _ in range(runs):
            out = subprocess.run(
                [sys.executable, "-c", TRACK_SNIPPET], env=env, capture_output=True, text=True, check=True
            )
            best = min(best, float(out.stdout.strip().splitlines()[-1]))
        print(f"{name:<12}{best:>10.2f}s")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--runs", type=int, default=3)
    args = parser.parse_args()
    available = bench_kernels()
    bench_end_to_end(available, args.runs)
