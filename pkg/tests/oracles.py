"""Independent reference implementations used to check the engine.

Everything here is deliberately naive: exhaustive path enumeration instead
of dynamic programming, and a straight banded DP for the bound reference.
None of it shares code with the package under test beyond the local
distance definition itself.
"""

from __future__ import annotations

import math

import numpy as np

_TWO_PI = 2.0 * math.pi


def local_delta(a, b, angle_weight: float) -> float:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    da = (a[2] - b[2] + math.pi) % _TWO_PI - math.pi
    return dx * dx + dy * dy + angle_weight * (da * da)


def brute_force_dtw(x: np.ndarray, y: np.ndarray, angle_weight: float) -> float:
    """Minimum accumulated cost over every monotone warping path,
    accumulating left to right exactly like the recurrence does."""
    K, L = len(x), len(y)
    best = [math.inf]

    def walk(i: int, j: int, acc: float) -> None:
        if i == K - 1 and j == L - 1:
            if acc < best[0]:
                best[0] = acc
            return
        if i + 1 < K and j + 1 < L:
            walk(i + 1, j + 1, acc + local_delta(x[i + 1], y[j + 1], angle_weight))
        if i + 1 < K:
            walk(i + 1, j, acc + local_delta(x[i + 1], y[j], angle_weight))
        if j + 1 < L:
            walk(i, j + 1, acc + local_delta(x[i], y[j + 1], angle_weight))

    walk(0, 0, local_delta(x[0], y[0], angle_weight))
    return best[0]


def banded_dtw_cost(x: np.ndarray, y: np.ndarray, r: int, angle_weight: float) -> float:
    """Root of the accumulated cost of the best path confined to the
    |i - j| <= r band (unnormalized)."""
    K, L = len(x), len(y)
    D = np.full((K, L), math.inf)
    for i in range(K):
        for j in range(max(0, i - r), min(L, i + r + 1)):
            d = local_delta(x[i], y[j], angle_weight)
            if i == 0 and j == 0:
                D[i, j] = d
                continue
            best = math.inf
            if i > 0 and j > 0 and D[i - 1, j - 1] < best:
                best = D[i - 1, j - 1]
            if i > 0 and D[i - 1, j] < best:
                best = D[i - 1, j]
            if j > 0 and D[i, j - 1] < best:
                best = D[i, j - 1]
            D[i, j] = best + d
    return math.sqrt(D[K - 1, L - 1])
