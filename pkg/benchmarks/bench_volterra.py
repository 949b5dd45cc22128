#!/usr/bin/env python3
"""Benchmark the Volterra history loop: compiled core vs pure-NumPy fallback.

The O(N^2) memory integral dominates the whole pipeline, so this times the
backend loops directly on a realistic kernel (Ohmic bath, default parameters)
for a range of horizons, and cross-checks that both cores produce the same
trajectory.

    python benchmarks/bench_volterra.py [--dt 1e-3] [--t-max 10 20 50]
"""
import argparse
import time

import numpy as np

from cvchannel import _volterra_py
from cvchannel.bath import SpectralDensity
from cvchannel.propagator import _product_weights

try:
    from cvchannel import _volterra
except ImportError:
    _volterra = None


def time_loop(core, weights, edge, dt, n_steps, repeats=3):
    best = np.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = core.center_amplitude_loop(weights, edge, dt, n_steps)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dt", type=float, default=1e-3)
    ap.add_argument("--t-max", type=float, nargs="+", default=[5.0, 10.0, 20.0, 50.0])
    ap.add_argument("--n", type=float, default=1.0, help="bath exponent")
    args = ap.parse_args()

    sd = SpectralDensity(n=args.n, eta=0.005, omega_c=30.0)
    if _volterra is None:
        print("compiled core not built; timing the NumPy fallback only\n")

    print(f"{'t_max':>8} {'steps':>9} {'numpy [s]':>10} {'compiled [s]':>13} "
          f"{'speedup':>8}  max|dphi|")
    for t_max in args.t_max:
        n_steps = int(round(t_max / args.dt))
        weights, edge = _product_weights(sd, 1.5, args.dt, n_steps)
        t_py, (phi_py, _) = time_loop(_volterra_py, weights, edge, args.dt, n_steps)
        if _volterra is not None:
            t_cy, (phi_cy, _) = time_loop(_volterra, weights, edge, args.dt, n_steps)
            diff = np.max(np.abs(phi_cy - phi_py))
            print(f"{t_max:8.1f} {n_steps:9d} {t_py:10.3f} {t_cy:13.3f} "
                  f"{t_py / t_cy:8.2f}  {diff:.2e}")
            assert diff < 1e-12, "backends disagree"
        else:
            print(f"{t_max:8.1f} {n_steps:9d} {t_py:10.3f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
