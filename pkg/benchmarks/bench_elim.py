"""Compare the compiled and pure-Python elimination kernels.

Times the integer kernel ``rref_int`` alone and the full ``rref`` (which adds
the Fraction conversions) on the derivation systems of M4 and M1 for
n = 8..12, with each available backend, and checks that both backends give
the same result.

    python benchmarks/bench_elim.py [--repeat 3]
"""

import argparse
import time

from filiform import linalg, make
from filiform.derivation import derivation_system


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = linalg.available_backends()
    print(f"backends: {', '.join(backends)}")
    head = " ".join(f"{b + ' ' + what:>16}" for what in ("kernel", "rref") for b in backends)
    print(f"{'system':<10} {'rows':>5} {'cols':>5} {head}")
    cases = [(f, n, p) for n in range(8, 13) for f, p in (("M4", {}), ("M1", {"k": n - 2}))]
    original = linalg.BACKEND
    try:
        for family, n, params in cases:
            system = derivation_system(make(family, n, **params))
            int_rows = [linalg._to_int_row(r) for r in system]
            kernel_times, full_times, results = [], [], []
            for b in backends:
                linalg.set_backend(b)
                t, r = bench(lambda: linalg._rref_int(int_rows, n * n), args.repeat)
                kernel_times.append(t)
                results.append(r)
                t, r = bench(lambda: linalg.rref(system, n * n), args.repeat)
                full_times.append(t)
            assert all(r == results[0] for r in results), "backends disagree"
            cells = " ".join(f"{t * 1000:14.1f}ms" for t in kernel_times + full_times)
            print(f"{family + '(' + str(n) + ')':<10} {len(system):>5} {n * n:>5} {cells}")
    finally:
        linalg.set_backend(original)


if __name__ == "__main__":
    main()
