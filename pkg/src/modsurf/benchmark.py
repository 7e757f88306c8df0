"""Benchmark the pairwise-distance kernel: JIT versus pure-Python fallback.

Run as `python -m modsurf.benchmark [-n N] [--repeat R]`.  The kernel
implementation is fixed at import time by the MODSURF_DISABLE_NUMBA
environment variable, so the two modes are timed in separate worker
subprocesses and compared here.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _prepare(n, seed):
    from .metrics import _reduced
    from .modular import SubgroupSpec
    from .sampling import sample_points

    spec = SubgroupSpec.parse("full")
    pts = sample_points(spec, n, seed=seed)
    reduced = [_reduced(p) for p in pts]
    xs = np.array([float(u.x) for u, _ in reduced])
    ys = np.array([float(u.y) for u, _ in reduced])
    words = np.array([w.entries() for _, w in reduced], dtype=np.int64)
    return spec, xs, ys, words


def _worker(n, repeat, seed):
    from . import kernels

    spec, xs, ys, words = _prepare(n, seed)
    kind, level = kernels.kind_code(spec), spec.level
    # warm-up: triggers JIT compilation when numba is enabled
    kernels.pairwise_min_cosh2(xs[:4], ys[:4], words[:4], kind, level)
    best = float("inf")
    checksum = 0.0
    for _ in range(repeat):
        t0 = time.perf_counter()
        vals = kernels.pairwise_min_cosh2(xs, ys, words, kind, level)
        best = min(best, time.perf_counter() - t0)
        checksum = float(vals.sum())
    print(json.dumps({
        "mode": "python" if kernels.USE_NUMBA is False else "numba",
        "n": n,
        "pairs": n * (n - 1) // 2,
        "seconds": best,
        "checksum": checksum,
    }))


def _run_mode(disable, n, repeat, seed):
    env = dict(os.environ)
    env["MODSURF_DISABLE_NUMBA"] = "1" if disable else ""
    out = subprocess.run(
        [sys.executable, "-m", "modsurf.benchmark", "--worker",
         "-n", str(n), "--repeat", str(repeat), "--seed", str(seed)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(prog="modsurf.benchmark")
    ap.add_argument("-n", type=int, default=256, help="number of sampled points")
    ap.add_argument("--repeat", type=int, default=3, help="timed repetitions (best kept)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        _worker(args.n, args.repeat, args.seed)
        return 0
    jit = _run_mode(False, args.n, args.repeat, args.seed)
    py = _run_mode(True, args.n, args.repeat, args.seed)
    if abs(jit["checksum"] - py["checksum"]) > 1e-6 * max(1.0, abs(py["checksum"])):
        print("checksum mismatch between modes", file=sys.stderr)
        return 1
    print("pairwise_min_cosh2, n=%d (%d pairs), best of %d:" %
          (args.n, jit["pairs"], args.repeat))
    print("  %-8s %10.4f s" % (jit["mode"], jit["seconds"]))
    print("  %-8s %10.4f s" % (py["mode"], py["seconds"]))
    if jit["seconds"] > 0:
        print("  speedup  %9.1fx" % (py["seconds"] / jit["seconds"]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
