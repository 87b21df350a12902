"""Compare the compiled kernels against the pure-Python fallback.

Times each kernel on representative workloads and prints per-call costs
and speedups.  Run from the repository root:

    python3 benchmarks/bench_backends.py
"""

from __future__ import annotations

import random
import time

from continued_roots import _kernels_py as pure

try:
    from continued_roots import _kernels as compiled
except ImportError:
    compiled = None


def time_call(fn, args, repeats):
    best = float("inf")
    for _ in range(5):
        start = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def workloads():
    rng = random.Random(99)
    for order in (8, 32, 128):
        u = [1.0] + [rng.uniform(-1.0, 1.0) for _ in range(order)]
        v = [1.0] + [rng.uniform(-1.0, 1.0) for _ in range(order)]
        yield f"cauchy_product (order {order})", "cauchy_product", (u, v)
        yield f"fractional_power (order {order})", "fractional_power", (u, 0.4)
    for depth in (4, 8, 16):
        params = [rng.uniform(0.1, 2.0) for _ in range(depth)]
        yield (
            f"nested_expansion (depth {depth})",
            "nested_expansion",
            (params, 2.0 / 3.0, depth),
        )
    params = [rng.uniform(0.1, 2.0) for _ in range(8)]
    yield "nested_evaluate (depth 8)", "nested_evaluate", (params, 2.0 / 3.0, 7.5, False)


def main():
    if compiled is None:
        print("compiled kernels are not built; showing pure-Python timings only")
    header = f"{'workload':<34} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, name, args in workloads():
        repeats = 2000 if "128" not in label else 200
        py_time = time_call(getattr(pure, name), args, repeats)
        if compiled is None:
            print(f"{label:<34} {py_time * 1e6:>10.2f}us {'-':>12} {'-':>9}")
            continue
        c_time = time_call(getattr(compiled, name), args, repeats)
        print(
            f"{label:<34} {py_time * 1e6:>10.2f}us {c_time * 1e6:>10.2f}us "
            f"{py_time / c_time:>8.1f}x"
        )


if __name__ == "__main__":
    main()
