"""Time the compiled and pure-Python enumeration kernels on the same workload.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from rsweight import _backend, build_domain, build_field
from rsweight.oracle import _member_setup


WORKLOADS = [
    # (p, a, domain kind, domain value, k, gammas)
    ((3, 2), "full", None, 5, (1, 2)),
    ((3, 4), "subfield", 9, 3, (1, 1)),
    ((7, 1), "full", None, 6, (3,)),
]


def run(kern, spec, D, k, gammas):
    base, powers = _member_setup(spec, D, k, gammas)
    return kern.root_histogram(np.asarray(base, dtype=np.int32),
                               np.asarray(powers, dtype=np.int32).reshape(k, D.n),
                               spec.add_table, spec.mul_table, spec.q, k, 0, spec.q**k)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':<28}{'backend':<10}{'best (s)':>10}{'speedup':>10}")
    for (p, a), kind, value, k, gammas in WORKLOADS:
        spec = build_field(p, a)
        D = build_domain(spec, kind, value)
        label = f"q={spec.q} n={D.n} k={k} l={len(gammas)}"
        timings, results = {}, {}
        for name, kern in backends.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[name] = run(kern, spec, D, k, gammas)
                best = min(best, time.perf_counter() - t0)
            timings[name] = best
        if len(results) > 1:
            assert all(np.array_equal(results["python"], h) for h in results.values())
        for name, t in timings.items():
            print(f"{label:<28}{name:<10}{t:>10.4f}{timings['python'] / t:>9.1f}x")


if __name__ == "__main__":
    main()
