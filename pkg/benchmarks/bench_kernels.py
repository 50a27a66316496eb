#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs both backends in-process (they are both importable regardless of the
INKMATCH_NUMBA flag), checks they agree, and reports per-call times for the
alignment fill+backtrack, envelope construction, lower-bound batches, and a
full nearest-template search.

    python benchmarks/bench_kernels.py [--length 50] [--candidates 200]
"""

import argparse
import math
import time

import numpy as np

from inkmatch import kernels

W = 0.5 / math.pi**2


def timeit(fn, repeat):
    fn()  # warm-up (numba compiles here)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def random_features(rng, m):
    a = np.empty((m, 3))
    a[:, :2] = rng.uniform(0, 1, size=(m, 2))
    a[:, 2] = rng.uniform(-np.pi, np.pi, size=m)
    return a


def nn_scan(fill, backtrack, lb_many, env_fn, query, cands, r):
    upper, lower = env_fn(query, r)
    lbs = lb_many(upper, lower, cands)
    best = math.inf
    evals = 0
    for idx in np.argsort(lbs, kind="stable"):
        if (lbs[idx] ** 2) / (2 * query.shape[0] - 1) > best:
            continue
        D = fill(query, cands[idx], W)
        delta = D[-1, -1] / len(backtrack(D))
        evals += 1
        best = min(best, delta)
    return best, evals


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--length", type=int, default=50)
    parser.add_argument("--candidates", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=50)
    args = parser.parse_args()

    if not kernels.NUMBA_ENABLED:
        raise SystemExit(
            "numba backend unavailable (INKMATCH_NUMBA=0 or numba missing); "
            "nothing to compare"
        )

    rng = np.random.default_rng(0)
    m = args.length
    x = random_features(rng, m)
    y = random_features(rng, m)
    r = math.ceil(0.1 * m)
    cands = np.stack([random_features(rng, m) for _ in range(args.candidates)])
    upper, lower = kernels._envelope_numpy(x, r)

    backends = {
        "numba": (
            kernels._dtw_fill_numba,
            kernels._backtrack_numba,
            kernels._lb_many_numba,
            kernels._envelope_numba,
        ),
        "numpy": (
            kernels._dtw_fill_numpy,
            kernels._backtrack_numpy,
            kernels._lb_many_numpy,
            kernels._envelope_numpy,
        ),
    }

    # agreement before speed
    D_nb = backends["numba"][0](x, y, W)
    D_np = backends["numpy"][0](x, y, W)
    assert np.array_equal(D_nb, D_np), "backends disagree on the cost matrix"
    assert np.array_equal(backends["numba"][1](D_nb), backends["numpy"][1](D_np))

    rows = {}
    for name, (fill, backtrack, lb_many, env_fn) in backends.items():
        rows[name] = {
            "dtw fill+backtrack": timeit(
                lambda: backtrack(fill(x, y, W)), args.repeat
            ),
            f"envelope (r={r})": timeit(lambda: env_fn(x, r), args.repeat),
            f"lb batch (n={args.candidates})": timeit(
                lambda: lb_many(upper, lower, cands), args.repeat
            ),
            f"nn search (n={args.candidates})": timeit(
                lambda: nn_scan(fill, backtrack, lb_many, env_fn, x, cands, r),
                max(1, args.repeat // 10),
            ),
        }

    ops = list(rows["numba"])
    width = max(len(op) for op in ops)
    print(f"sequence length {m}, reach {r}, {args.candidates} candidates\n")
    print(f"{'kernel':<{width}}  {'numba':>12}  {'numpy':>12}  {'speedup':>8}")
    for op in ops:
        nb, npx = rows["numba"][op], rows["numpy"][op]
        print(f"{op:<{width}}  {nb * 1e6:>10.1f}us  {npx * 1e6:>10.1f}us  {npx / nb:>7.1f}x")


if __name__ == "__main__":
    main()
