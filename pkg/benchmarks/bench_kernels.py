"""Time the compiled and pure-Python trajectory kernels on the same batch.

    python benchmarks/bench_kernels.py --count 1000 --steps 60
"""

import argparse
import math
import timeit

import numpy as np

from midarc import _pykernels

try:
    from midarc import _ckernels
except ImportError:
    _ckernels = None


def batch(count: int, seed: int):
    rng = np.random.default_rng(seed)
    thetas = np.sort(rng.uniform(0.0, 2 * math.pi, (count, 3)), axis=1)
    radius = rng.uniform(0.5, 2.0, count)
    return thetas, radius


def pipeline(mod, thetas, radius, steps):
    ang = mod.angular_trajectories(thetas, steps)
    arcs = mod.arcs_from_positions(ang, radius)
    mod.deviations(arcs, 2 * math.pi * radius)
    mod.arc_trajectories(arcs[:, 0, :], steps)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--steps", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    thetas, radius = batch(args.count, args.seed)
    backends = [("python", _pykernels)]
    if _ckernels is None:
        print("compiled kernels not built; timing the Python backend only")
    else:
        backends.insert(0, ("cython", _ckernels))

    results = {}
    for name, mod in backends:
        best = min(
            timeit.repeat(lambda: pipeline(mod, thetas, radius, args.steps), number=1, repeat=args.repeat)
        )
        results[name] = best
        print(f"{name:>7}: {best * 1e3:9.2f} ms  ({args.count} triangles x {args.steps} steps)")
    if len(results) == 2:
        print(f"speedup: {results['python'] / results['cython']:.1f}x")


if __name__ == "__main__":
    main()
