#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Covers the two hot kernels (trilinear k-space gather, gradient entropy) and
an end-to-end motion corruption at volume scale.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sizes 32 64 96 --repeats 10
    python benchmarks/bench_kernels.py --output results.json
"""

import argparse
import json
import time

import numpy as np

from motionforge import _kernels
from motionforge.motion import MotionTrajectory, corrupt, gen_trajectory, make_schedule, TrajectoryGenSpec
from motionforge.phantom import default_acquisition, default_phantom, synthesize_mgre


def _time(fn, repeats):
    fn()  # warm up (JIT compile on the numba path)
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def bench_gather(sizes, repeats):
    rows = []
    print("\nTRILINEAR GATHER (full-volume rotation coordinates)")
    print(f"{'n':>6} {'points':>10} {'numba (ms)':>12} {'numpy (ms)':>12} {'speedup':>9}")
    rng = np.random.default_rng(0)
    for n in sizes:
        vol = rng.standard_normal((n, n, n)) + 1j * rng.standard_normal((n, n, n))
        coords = rng.uniform(-1, n, size=(3, n * n * n))
        times = {}
        for backend in ("numba", "numpy"):
            if backend == "numba" and not _kernels._HAVE_NUMBA:
                times[backend] = float("inf")
                continue
            _kernels.set_backend(backend)
            times[backend] = _time(
                lambda: _kernels.trilinear_gather(vol, coords[0], coords[1], coords[2]), repeats
            )
        speedup = times["numpy"] / times["numba"]
        print(
            f"{n:>6} {n**3:>10} {times['numba']*1e3:>12.2f} {times['numpy']*1e3:>12.2f} {speedup:>8.1f}x"
        )
        rows.append(dict(n=n, numba_s=times["numba"], numpy_s=times["numpy"], speedup=speedup))
    return rows


def bench_entropy(sizes, repeats):
    rows = []
    print("\nGRADIENT ENTROPY")
    print(f"{'n':>6} {'numba (ms)':>12} {'numpy (ms)':>12} {'speedup':>9}")
    rng = np.random.default_rng(1)
    for n in sizes:
        vol = rng.standard_normal((n, n, n)) + 1j * rng.standard_normal((n, n, n))
        times = {}
        for backend in ("numba", "numpy"):
            if backend == "numba" and not _kernels._HAVE_NUMBA:
                times[backend] = float("inf")
                continue
            _kernels.set_backend(backend)
            times[backend] = _time(lambda: _kernels.gradient_entropy_terms(vol), repeats)
        speedup = times["numpy"] / times["numba"]
        print(f"{n:>6} {times['numba']*1e3:>12.2f} {times['numpy']*1e3:>12.2f} {speedup:>8.1f}x")
        rows.append(dict(n=n, numba_s=times["numba"], numpy_s=times["numpy"], speedup=speedup))
    return rows


def bench_corrupt(size, repeats):
    print(f"\nEND-TO-END corrupt() on {size}^3, 2 echoes, 8 states with rotations")
    ph = default_phantom((size,) * 3)
    acq = default_acquisition(2)
    mgre = synthesize_mgre(ph, acq)
    sched = make_schedule(ph.dims, "sequential")
    traj = gen_trajectory(TrajectoryGenSpec(mode="gaussian", seed=0), sched)
    rows = []
    for backend in ("numba", "numpy"):
        if backend == "numba" and not _kernels._HAVE_NUMBA:
            continue
        _kernels.set_backend(backend)
        t = _time(lambda: corrupt(mgre, traj, sched), max(1, repeats // 3))
        print(f"  {backend:>6}: {t*1e3:.1f} ms")
        rows.append(dict(backend=backend, seconds=t))
    return rows


def main():
    ap = argparse.ArgumentParser(description="motionforge kernel benchmarks")
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--output", default=None, help="write results JSON here")
    args = ap.parse_args()

    print("=" * 64)
    print("MOTIONFORGE KERNEL BENCHMARKS")
    print("=" * 64)
    print(f"numba available: {_kernels._HAVE_NUMBA} (active backend: {_kernels.get_backend()})")
    print(f"worker cap: {_kernels.worker_count()}")

    results = dict(
        numba_available=_kernels._HAVE_NUMBA,
        sizes=args.sizes,
        repeats=args.repeats,
        gather=bench_gather(args.sizes, args.repeats),
        entropy=bench_entropy(args.sizes, args.repeats),
        corrupt=bench_corrupt(max(args.sizes), args.repeats),
    )
    if _kernels._HAVE_NUMBA:
        _kernels.set_backend("numba")

    if args.output:
        with open(args.output, "w") as fh:
            json.dump(results, fh, indent=2)
        print(f"\nresults written to {args.output}")


if __name__ == "__main__":
    main()
