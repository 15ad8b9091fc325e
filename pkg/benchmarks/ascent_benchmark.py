#!/usr/bin/env python3
"""Benchmark the compiled ascent kernels against the pure-numpy fallback.

Times a fixed batch of multi-start ascents on both space families and prints
per-backend wall times plus the speedup.  Usage:

    python benchmarks/ascent_benchmark.py [--restarts N] [--repeat K]
"""

import argparse
import time

import numpy as np

from orbit_forge import kernels
from orbit_forge.algebras import embed_dpi
from orbit_forge.matrices import haar_orthogonal
from orbit_forge.orbits import _random_sp_group_image
from orbit_forge.spaces import MetricParams, make_so7_vector, make_sp_candidate


def _so_batch(kernel, restarts):
    w = np.asarray(make_so7_vector("vect1", 1.5).matrix)
    best = -np.inf
    iters = 0
    for idx in range(restarts):
        if idx == 0:
            q0, v0 = np.eye(7), w
        else:
            rng = np.random.default_rng(np.random.SeedSequence(1234, spawn_key=(idx,)))
            q0 = haar_orthogonal(7, int(rng.integers(0, 2 ** 31)))
            v0 = q0 @ w @ q0.T
        f, _, _, its = kernel.so_ascent(v0, q0, 3, 1.0, 1.5, 0.5, 500, 1e-9)
        best = max(best, f)
        iters += its
    return best, iters


def _sp_batch(kernel, restarts, l=4):
    params = MetricParams(1.0, 1.5)
    w = embed_dpi(l, make_sp_candidate(l, 1.0, 1.0, params))
    best = -np.inf
    iters = 0
    ident = np.eye(2 * l, dtype=complex)
    for idx in range(restarts):
        if idx == 0:
            q0, v0 = ident, w
        else:
            rng = np.random.default_rng(np.random.SeedSequence(1234, spawn_key=(idx,)))
            q0 = _random_sp_group_image(l, rng)
            v0 = q0 @ w @ q0.conj().T
        f, _, _, its = kernel.sp_ascent(v0, q0, l, 1.0, 1.5, 0.5, 500, 1e-9)
        best = max(best, f)
        iters += its
    return best, iters


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--restarts", type=int, default=64)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)}")
    results = {}
    for name, module in backends.items():
        for family, batch in (("so7", _so_batch), ("sp4", _sp_batch)):
            best_time = np.inf
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                best, iters = batch(module, args.restarts)
                best_time = min(best_time, time.perf_counter() - t0)
            results[(name, family)] = (best_time, best, iters)
            print(f"{name:>7} {family}: {best_time:8.3f}s  "
                  f"(best={best:.9f}, iters={iters})")

    if "cython" in backends:
        for family in ("so7", "sp4"):
            t_py = results[("python", family)][0]
            t_cy = results[("cython", family)][0]
            agree = abs(results[("python", family)][1]
                        - results[("cython", family)][1]) < 1e-7
            print(f"speedup {family}: {t_py / t_cy:6.1f}x  "
                  f"(values agree: {agree})")


if __name__ == "__main__":
    main()
