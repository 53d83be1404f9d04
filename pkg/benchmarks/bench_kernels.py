"""Benchmark the compiled F_p kernels against the pure-Python twin.

Run: python3 benchmarks/bench_kernels.py [--prime P]

The shapes mirror the hot call sites: 10x10 determinants (sextic sampling),
25x20 eliminations (fiber intersection ranks), and 4x4 ranks (projective
field scans).
"""

import argparse
import random
import time

from epwcalc import _fp_pure

try:
    from epwcalc import _fp_cy
except ImportError:
    _fp_cy = None


def bench(fn, batches, reps):
    start = time.perf_counter()
    for _ in range(reps):
        for args in batches:
            fn(*args)
    elapsed = time.perf_counter() - start
    return elapsed / (reps * len(batches))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--prime", type=int, default=10007)
    parser.add_argument("--batch", type=int, default=200)
    args = parser.parse_args()
    p = args.prime
    rng = random.Random(0)

    cases = [
        ("det 10x10", "det", [([rng.randrange(p) for _ in range(100)], 10, p) for _ in range(args.batch)], 10),
        ("rank 25x20", "rank", [([rng.randrange(p) for _ in range(500)], 25, 20, p) for _ in range(args.batch)], 4),
        ("rank 4x4", "rank", [([rng.randrange(p) for _ in range(16)], 4, 4, p) for _ in range(args.batch)], 100),
        ("rref 12x20", "rref", [([rng.randrange(p) for _ in range(240)], 12, 20, p) for _ in range(args.batch)], 5),
    ]

    print(f"prime {p}, batch {args.batch}")
    print(f"{'kernel':<12} {'pure us/op':>12} {'compiled us/op':>16} {'speedup':>9}")
    for name, attr, batch, reps in cases:
        t_pure = bench(getattr(_fp_pure, attr), batch, reps)
        if _fp_cy is None:
            print(f"{name:<12} {t_pure * 1e6:>12.2f} {'unavailable':>16} {'-':>9}")
            continue
        t_cy = bench(getattr(_fp_cy, attr), batch, reps)
        for args_ in batch[:10]:  # sanity: identical outputs
            assert getattr(_fp_pure, attr)(*[list(a) if isinstance(a, list) else a for a in args_]) == getattr(
                _fp_cy, attr
            )(*[list(a) if isinstance(a, list) else a for a in args_])
        print(f"{name:<12} {t_pure * 1e6:>12.2f} {t_cy * 1e6:>16.2f} {t_pure / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
