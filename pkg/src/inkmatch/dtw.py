"""Elastic matching between feature sequences.

The distance between two sequences is the classical DTW accumulated cost at
the final cell, normalized by the length of the back-tracked optimal path.
Nearest-template search prunes candidates with an envelope lower bound
before paying for a full alignment; pruning never changes the top hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .config import EngineConfig
from .features import FeatureSeq

_DEFAULT_ANGLE_WEIGHT = EngineConfig().angle_weight


def as_feature_array(x) -> np.ndarray:
    """Coerce a FeatureSeq or (m, 3) array to contiguous float64."""
    if isinstance(x, FeatureSeq):
        return x.data
    a = np.ascontiguousarray(x, dtype=np.float64)
    if a.ndim != 2 or a.shape[1] != 3 or a.shape[0] == 0:
        raise ValueError(f"expected a non-empty (m, 3) feature array, got {a.shape}")
    return a


def wrap_angle(a: float) -> float:
    """Map an angle difference into [-pi, pi); squared terms only care
    about magnitude, so the half-open side is immaterial."""
    return (a + math.pi) % (2.0 * math.pi) - math.pi


def local_distance(a, b, angle_weight: float = _DEFAULT_ANGLE_WEIGHT) -> float:
    ax, ay, aa = float(a[0]), float(a[1]), float(a[2])
    bx, by, ba = float(b[0]), float(b[1]), float(b[2])
    da = wrap_angle(aa - ba)
    return (ax - bx) * (ax - bx) + (ay - by) * (ay - by) + angle_weight * (da * da)


@dataclass(frozen=True)
class WarpPath:
    """Alignment path through the cost matrix, 0-based index pairs.

    Construction enforces the boundary, monotonicity, and continuity
    conditions; an invalid path can never leave this module.
    """

    steps: np.ndarray
    k_len: int
    l_len: int

    def __post_init__(self):
        steps = np.ascontiguousarray(self.steps, dtype=np.int64)
        object.__setattr__(self, "steps", steps)
        if steps.ndim != 2 or steps.shape[1] != 2 or steps.shape[0] == 0:
            raise ValueError("warping path must be a non-empty (T, 2) array")
        if steps[0, 0] != 0 or steps[0, 1] != 0:
            raise ValueError("warping path violates the boundary condition at the start")
        if steps[-1, 0] != self.k_len - 1 or steps[-1, 1] != self.l_len - 1:
            raise ValueError("warping path violates the boundary condition at the end")
        if len(steps) > 1:
            inc = np.diff(steps, axis=0)
            if (inc < 0).any() or (inc > 1).any() or (inc.sum(axis=1) < 1).any():
                raise ValueError("warping path violates monotonicity/continuity")

    def __len__(self) -> int:
        return self.steps.shape[0]

    @property
    def T(self) -> int:
        return self.steps.shape[0]


@dataclass(frozen=True)
class Envelope:
    """Component-wise running min/max of a sequence over a +/- reach window."""

    upper: np.ndarray
    lower: np.ndarray
    reach: int

    def __len__(self) -> int:
        return self.upper.shape[0]


@dataclass
class SearchStats:
    """Instrumentation for nearest-template search."""

    candidates: int = 0
    full_dtw: int = 0
    pruned: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.candidates += other.candidates
        self.full_dtw += other.full_dtw
        self.pruned += other.pruned


def dtw_distance(x, y, angle_weight: float = _DEFAULT_ANGLE_WEIGHT) -> tuple[float, WarpPath]:
    """Path-normalized DTW distance and its optimal warping path.

    Ties in the backtracking prefer the diagonal, then the (k-1, l)
    predecessor, so paths (and therefore the normalization) are
    deterministic.
    """
    xa = as_feature_array(x)
    ya = as_feature_array(y)
    cost, steps = kernels.dtw_solve(xa, ya, angle_weight)
    path = WarpPath(steps, k_len=xa.shape[0], l_len=ya.shape[0])
    return cost / path.T, path


def envelope(x, r: int) -> Envelope:
    if r < 0:
        raise ValueError("reach must be non-negative")
    xa = as_feature_array(x)
    upper, lower = kernels.envelope_bounds(xa, int(r))
    return Envelope(upper, lower, int(r))


def lb_keogh(env: Envelope, y) -> float:
    """Lower bound on the band-constrained alignment cost of the envelope's
    sequence against ``y``: root of the summed squared excursions of ``y``
    outside [lower, upper].

    Only the position channels contribute; the angle channel wraps, so a
    linear envelope cannot bound it admissibly.
    """
    ya = as_feature_array(y)
    if ya.shape[0] != len(env):
        raise ValueError(
            f"length mismatch: envelope has {len(env)} rows, sequence has {ya.shape[0]}"
        )
    return float(kernels.lb_many(env.upper, env.lower, ya[None, :, :])[0])


def _lb_to_delta_scale(lb: float, k_len: int, l_len: int) -> float:
    # lb bounds the root of the accumulated cost; squaring and dividing by
    # the longest possible path puts it on the same scale as the
    # path-normalized distance, keeping the pruning decision admissible.
    return (lb * lb) / (k_len + l_len - 1)


def nn_search(
    query,
    candidates: Sequence,
    r: int | None = None,
    *,
    angle_weight: float = _DEFAULT_ANGLE_WEIGHT,
    reach_fraction: float = 0.1,
    stats: SearchStats | None = None,
    prune: bool = True,
) -> list[tuple[int, float]]:
    """Exact nearest-candidate search under the normalized DTW distance.

    Candidates are visited in ascending lower-bound order; a full alignment
    runs only while the bound does not already exceed the best distance so
    far. Returns (candidate index, distance) pairs for every candidate that
    was fully evaluated, best first; the leading entry always matches an
    exhaustive search.
    """
    if len(candidates) == 0:
        raise ValueError("no candidates")
    q = as_feature_array(query)
    m = q.shape[0]
    arrays = [as_feature_array(c) for c in candidates]
    if r is None:
        r = math.ceil(reach_fraction * m)

    if prune and all(a.shape[0] == m for a in arrays):
        env = envelope(q, r)
        stack = np.stack(arrays)
        lbs = kernels.lb_many(env.upper, env.lower, stack)
    else:
        lbs = np.zeros(len(arrays))

    order = np.argsort(lbs, kind="stable")
    best = math.inf
    best_idx = -1
    evaluated: list[tuple[int, float]] = []
    full = 0
    for idx in order:
        idx = int(idx)
        bound = _lb_to_delta_scale(float(lbs[idx]), m, arrays[idx].shape[0])
        if prune and bound > best:
            continue
        delta, _ = dtw_distance(q, arrays[idx], angle_weight)
        full += 1
        evaluated.append((idx, delta))
        if delta < best or (delta == best and idx < best_idx):
            best = delta
            best_idx = idx
    evaluated.sort(key=lambda t: (t[1], t[0]))
    if stats is not None:
        stats.candidates += len(arrays)
        stats.full_dtw += full
        stats.pruned += len(arrays) - full
    return evaluated
