#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python fallback.

Runs the same workloads through both implementations and prints a table of
timings.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from plethysm._kernels import _fill_py

try:
    from plethysm._kernels import _fill_cy
except ImportError:
    _fill_cy = None


def unit_contents(d):
    return tuple(tuple(1 if p == b else 0 for p in range(d)) for b in range(d))


def pair_contents(d):
    # contents of the weakly increasing pairs (a, b), a <= b <= d
    out = []
    for a in range(1, d + 1):
        for b in range(a, d + 1):
            c = [0] * d
            c[a - 1] += 1
            c[b - 1] += 1
            out.append(tuple(c))
    return tuple(out)


def workloads():
    d = 8
    pc = pair_contents(d)
    cap = tuple(max(sum(c[: p + 1]) for c in pc) for p in range(d))
    yield (
        "count SSYT (4,3,2,1) on 8 letters",
        lambda impl: impl.fill_all_count((4, 3, 2, 1), 8),
    )
    yield (
        "Kostka K((4,3,2,1),(3,3,2,1,1)) via weighted fill",
        lambda impl: impl.fill_weighted(
            (4, 3, 2, 1), 5, unit_contents(5), (3, 3, 2, 1, 1), (1,) * 5, 0, False
        )[0],
    )
    yield (
        "weight histogram of quartic power of pairs, 8 letters",
        lambda impl: len(impl.fill_weight_histogram((4,), len(pc), pc, d)),
    )
    yield (
        "weighted count of pair fillings at weight (4,2,2,2,2,2,1,1)",
        lambda impl: impl.fill_weighted(
            (4,), len(pc), pc, (4, 2, 2, 2, 2, 2, 1, 1), cap, 0, False
        )[0],
    )


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = [("python", _fill_py)]
    if _fill_cy is not None:
        impls.append(("cython", _fill_cy))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    header = f"{'workload':<55} " + " ".join(f"{name:>10}" for name, _ in impls)
    print(header)
    print("-" * len(header))
    for label, fn in workloads():
        row = [f"{label:<55}"]
        results = []
        for _, impl in impls:
            best = min(
                _timed(fn, impl) for _ in range(args.repeat)
            )
            results.append(best)
            row.append(f"{best * 1000:>9.1f}ms")
        values = {fn(impl) for _, impl in impls}
        assert len(values) == 1, f"implementations disagree on {label}: {values}"
        if len(results) == 2 and results[1] > 0:
            row.append(f"  ({results[0] / results[1]:.1f}x)")
        print(" ".join(row))


def _timed(fn, impl) -> float:
    started = time.perf_counter()
    fn(impl)
    return time.perf_counter() - started


if __name__ == "__main__":
    main()
