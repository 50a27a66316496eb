"""Hot numeric kernels: DTW cost fill, path backtracking, envelopes, and
lower-bound excursion sums.

Two interchangeable backends exist for each kernel. The default is numba
``@njit`` over the plain-loop implementations; setting ``INKMATCH_NUMBA=0``
(or ``false``) in the environment selects the vectorized pure-numpy path
instead, which also kicks in automatically when numba is unavailable.
Both backends fill identical cost matrices (same scalar operations per
cell); reduction-based results (lower-bound sums) may differ in the last
few bits because numpy sums pairwise. ``benchmarks/bench_kernels.py``
compares the two.

Feature sequences arrive as float64 arrays of shape (m, 3): x, y, tangent
angle. The local distance between two rows is

    dx^2 + dy^2 + w * wrap(da)^2

with the angle difference wrapped into the principal interval.
"""

from __future__ import annotations

import math
import os

import numpy as np

_TWO_PI = 2.0 * math.pi


def _numba_wanted() -> bool:
    return os.environ.get("INKMATCH_NUMBA", "1").strip().lower() not in ("0", "false", "off")


# ---------------------------------------------------------------------------
# loop implementations (njit sources; runnable uncompiled for debugging)
# ---------------------------------------------------------------------------

def _dtw_fill_loops(x: np.ndarray, y: np.ndarray, angle_weight: float) -> np.ndarray:
    K = x.shape[0]
    L = y.shape[0]
    D = np.empty((K, L), dtype=np.float64)
    for i in range(K):
        for j in range(L):
            dx = x[i, 0] - y[j, 0]
            dy = x[i, 1] - y[j, 1]
            da = (x[i, 2] - y[j, 2] + math.pi) % _TWO_PI - math.pi
            delta = dx * dx + dy * dy + angle_weight * (da * da)
            if i == 0 and j == 0:
                D[i, j] = delta
            elif i == 0:
                D[i, j] = D[i, j - 1] + delta
            elif j == 0:
                D[i, j] = D[i - 1, j] + delta
            else:
                best = D[i - 1, j - 1]
                if D[i - 1, j] < best:
                    best = D[i - 1, j]
                if D[i, j - 1] < best:
                    best = D[i, j - 1]
                D[i, j] = best + delta
    return D


def _backtrack_loops(D: np.ndarray) -> np.ndarray:
    # Predecessor preference on ties: diagonal, then (i-1, j), then (i, j-1).
    # Must stay in lockstep with the numpy-backend backtrack below.
    K = D.shape[0]
    L = D.shape[1]
    buf = np.empty((K + L - 1, 2), dtype=np.int64)
    pos = K + L - 1
    i = K - 1
    j = L - 1
    pos -= 1
    buf[pos, 0] = i
    buf[pos, 1] = j
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            d = D[i - 1, j - 1]
            u = D[i - 1, j]
            le = D[i, j - 1]
            if d <= u and d <= le:
                i -= 1
                j -= 1
            elif u <= le:
                i -= 1
            else:
                j -= 1
        pos -= 1
        buf[pos, 0] = i
        buf[pos, 1] = j
    return buf[pos:].copy()


def _envelope_loops(x: np.ndarray, r: int) -> tuple[np.ndarray, np.ndarray]:
    K = x.shape[0]
    C = x.shape[1]
    upper = np.empty_like(x)
    lower = np.empty_like(x)
    for k in range(K):
        a = k - r
        if a < 0:
            a = 0
        b = k + r + 1
        if b > K:
            b = K
        for c in range(C):
            hi = x[a, c]
            lo = x[a, c]
            for t in range(a + 1, b):
                v = x[t, c]
                if v > hi:
                    hi = v
                if v < lo:
                    lo = v
            upper[k, c] = hi
            lower[k, c] = lo
    return upper, lower


def _lb_many_loops(upper: np.ndarray, lower: np.ndarray, ys: np.ndarray) -> np.ndarray:
    # Position channels only: the angle channel wraps, so a linear
    # min/max envelope cannot bound its wrapped distance.
    n = ys.shape[0]
    m = ys.shape[1]
    out = np.empty(n, dtype=np.float64)
    for q in range(n):
        acc = 0.0
        for k in range(m):
            for c in range(2):
                v = ys[q, k, c]
                if v > upper[k, c]:
                    e = v - upper[k, c]
                    acc += e * e
                elif v < lower[k, c]:
                    e = lower[k, c] - v
                    acc += e * e
        out[q] = math.sqrt(acc)
    return out


# ---------------------------------------------------------------------------
# vectorized numpy backend
# ---------------------------------------------------------------------------

def local_cost_matrix(x: np.ndarray, y: np.ndarray, angle_weight: float) -> np.ndarray:
    dx = x[:, None, 0] - y[None, :, 0]
    dy = x[:, None, 1] - y[None, :, 1]
    da = (x[:, None, 2] - y[None, :, 2] + math.pi) % _TWO_PI - math.pi
    return dx * dx + dy * dy + angle_weight * (da * da)


def _dtw_fill_numpy(x: np.ndarray, y: np.ndarray, angle_weight: float) -> np.ndarray:
    delta = local_cost_matrix(x, y, angle_weight)
    K, L = delta.shape
    D = np.empty_like(delta)
    D[0, :] = np.cumsum(delta[0, :])
    D[:, 0] = np.cumsum(delta[:, 0])
    # sweep anti-diagonals: every dependency lies on the two previous ones
    for s in range(2, K + L - 1):
        i0 = max(1, s - L + 1)
        i1 = min(K - 1, s - 1)
        if i0 > i1:
            continue
        i = np.arange(i0, i1 + 1)
        j = s - i
        best = np.minimum(np.minimum(D[i - 1, j - 1], D[i - 1, j]), D[i, j - 1])
        D[i, j] = best + delta[i, j]
    return D


def _backtrack_numpy(D: np.ndarray) -> np.ndarray:
    K, L = D.shape
    steps = [(K - 1, L - 1)]
    i, j = K - 1, L - 1
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            d = D[i - 1, j - 1]
            u = D[i - 1, j]
            le = D[i, j - 1]
            if d <= u and d <= le:
                i -= 1
                j -= 1
            elif u <= le:
                i -= 1
            else:
                j -= 1
        steps.append((i, j))
    steps.reverse()
    return np.array(steps, dtype=np.int64)


def _envelope_numpy(x: np.ndarray, r: int) -> tuple[np.ndarray, np.ndarray]:
    if r == 0:
        return x.copy(), x.copy()
    padded = np.pad(x, ((r, r), (0, 0)), mode="edge")
    win = np.lib.stride_tricks.sliding_window_view(padded, 2 * r + 1, axis=0)
    return win.max(axis=-1), win.min(axis=-1)


def _lb_many_numpy(upper: np.ndarray, lower: np.ndarray, ys: np.ndarray) -> np.ndarray:
    yp = ys[..., :2]
    over = np.maximum(yp - upper[None, :, :2], 0.0)
    under = np.maximum(lower[None, :, :2] - yp, 0.0)
    exc = over + under
    return np.sqrt((exc * exc).sum(axis=(1, 2)))


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

NUMBA_ENABLED = False
_dtw_fill_numba = None
_backtrack_numba = None
_envelope_numba = None
_lb_many_numba = None

if _numba_wanted():
    try:
        from numba import njit

        _dtw_fill_numba = njit(cache=True)(_dtw_fill_loops)
        _backtrack_numba = njit(cache=True)(_backtrack_loops)
        _envelope_numba = njit(cache=True)(_envelope_loops)
        _lb_many_numba = njit(cache=True)(_lb_many_loops)
        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - exercised via env flag instead
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    dtw_fill = _dtw_fill_numba
    dtw_backtrack = _backtrack_numba
    envelope_bounds = _envelope_numba
    lb_many = _lb_many_numba
    BACKEND = "numba"
else:
    dtw_fill = _dtw_fill_numpy
    dtw_backtrack = _backtrack_numpy
    envelope_bounds = _envelope_numpy
    lb_many = _lb_many_numpy
    BACKEND = "numpy"


def dtw_solve(x: np.ndarray, y: np.ndarray, angle_weight: float) -> tuple[float, np.ndarray]:
    """Accumulated cost at (K, L) and the tie-broken optimal path (T, 2)."""
    D = dtw_fill(x, y, angle_weight)
    path = dtw_backtrack(D)
    return float(D[-1, -1]), path
