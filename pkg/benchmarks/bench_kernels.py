"""Time the compiled grid kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--points 129]
"""
import argparse
import math
import time

import numpy as np

from bellinfo import _fallback

try:
    from bellinfo import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def cases(points):
    grid = np.linspace(0, math.pi, points)
    fine = np.linspace(0, math.pi, 8 * (points - 1) + 1)
    table = _fallback.flow_table(grid, grid, 1)
    rng = np.random.default_rng(0)
    dense = rng.uniform(size=(48, 48)) < 0.5
    dense = dense & dense.T
    return [
        (f"flow_table {len(fine)}^2", lambda m: m.flow_table(fine, fine, 1)),
        (f"triple_scan {points}^3", lambda m: m.triple_scan(table, 1e-9)),
        ("multisets n=5, 48 nodes p=0.25", lambda m: m.independent_multisets(dense, 5)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--points", type=int, default=129)
    args = ap.parse_args()

    backends = [("python", _fallback)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{'case':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + ("  speedup" if _kernels else ""))
    for label, fn in cases(args.points):
        timings, outputs = [], []
        for _, mod in backends:
            t, out = best_of(lambda: fn(mod), args.repeat)
            timings.append(t)
            outputs.append(out)
        if len(outputs) == 2:
            a, b = outputs
            same = np.allclose(a, b, atol=1e-15) if isinstance(a, np.ndarray) else a == b
            if not same:
                raise SystemExit(f"backends disagree on {label}")
        line = f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in timings)
        if len(timings) == 2:
            line += f"  {timings[0] / timings[1]:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
