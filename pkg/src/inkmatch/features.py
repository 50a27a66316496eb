"""Stroke cleanup and feature extraction.

A cleaned stroke becomes a feature sequence of (x, y, angle) rows: the pen
position of each sample paired with the tangent angle toward the next
sample, computed with arctan2 so that a stroke and its reverse produce
different features (direction matters). A stroke with l points yields l-1
feature rows; the final pen position is kept alongside so the full polyline
can be reconstructed, e.g. when templates are averaged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ink import InkSymbol, Stroke, _freeze


@dataclass(frozen=True, eq=False)
class FeatureSeq:
    """(l-1, 3) array of x, y, tangent-angle rows plus the final pen position."""

    data: np.ndarray
    end: np.ndarray
    source_len: int

    def __post_init__(self):
        object.__setattr__(self, "data", _freeze(self.data))
        object.__setattr__(self, "end", _freeze(self.end))
        if self.data.ndim != 2 or self.data.shape[1] != 3:
            raise ValueError(f"feature data must be (m, 3), got {self.data.shape}")
        if self.data.shape[0] != self.source_len - 1:
            raise ValueError("feature length must be source point count minus one")

    def __len__(self) -> int:
        return self.data.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureSeq):
            return NotImplemented
        return (
            self.source_len == other.source_len
            and np.array_equal(self.data, other.data)
            and np.array_equal(self.end, other.end)
        )

    @property
    def positions(self) -> np.ndarray:
        return self.data[:, :2]

    @property
    def angles(self) -> np.ndarray:
        return self.data[:, 2]

    def polyline(self) -> np.ndarray:
        """Full (l, 2) point path, endpoint included."""
        return np.vstack([self.data[:, :2], self.end[None, :]])


def dedupe_points(stroke: Stroke, eps: float = 1e-6) -> Stroke:
    """Drop consecutive points closer than ``eps`` (Euclidean), keeping order.

    Raises ValueError("degenerate stroke") when fewer than 2 points survive.
    """
    pts = stroke.points
    keep = [0]
    for i in range(1, len(pts)):
        d = pts[i] - pts[keep[-1]]
        if d[0] * d[0] + d[1] * d[1] > eps * eps:
            keep.append(i)
    if len(keep) < 2:
        raise ValueError("degenerate stroke")
    if len(keep) == len(pts):
        return stroke
    idx = np.array(keep)
    times = None if stroke.times is None else stroke.times[idx]
    return Stroke(pts[idx], times)


def normalize_symbol(symbol: InkSymbol) -> InkSymbol:
    """Map the symbol's joint bounding box into the unit square.

    Uniform scale (aspect preserved), centered on the shorter axis, so the
    relative geometry between strokes survives for the spatial predicates.
    """
    allpts = np.vstack([s.points for s in symbol.strokes])
    lo = allpts.min(axis=0)
    hi = allpts.max(axis=0)
    extent = hi - lo
    span = extent.max()
    if span <= 0.0:
        raise ValueError("zero-extent symbol")
    scale = 1.0 / span
    offset = (1.0 - extent * scale) / 2.0
    strokes = tuple(
        Stroke((s.points - lo) * scale + offset, s.times) for s in symbol.strokes
    )
    return InkSymbol(strokes, label=symbol.label, writer=symbol.writer)


def _arc_positions(pts: np.ndarray) -> np.ndarray:
    seg = np.sqrt(((pts[1:] - pts[:-1]) ** 2).sum(axis=1))
    return np.concatenate([[0.0], np.cumsum(seg)])


def _sample_at(pts: np.ndarray, targets: np.ndarray) -> np.ndarray:
    arc = _arc_positions(pts)
    # zero-length segments would break interpolation; keep one point per arc value
    keep = np.concatenate([[True], np.diff(arc) > 0])
    arc, pts = arc[keep], pts[keep]
    x = np.interp(targets, arc, pts[:, 0])
    y = np.interp(targets, arc, pts[:, 1])
    return np.column_stack([x, y])


def resample_stroke(stroke: Stroke, spacing: float) -> Stroke:
    """Resample to points equidistant in arc length, endpoints preserved.

    The segment count is ``round(length / spacing)`` so the actual spacing
    is the nearest value to ``spacing`` that divides the stroke evenly; a
    spacing at or beyond the arc length keeps only the endpoints.
    """
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    arc = _arc_positions(stroke.points)
    length = arc[-1]
    if length <= 0:
        raise ValueError("stroke has zero arc length")
    segments = max(1, int(round(length / spacing)))
    return resample_stroke_to(stroke, segments + 1)


def resample_stroke_to(stroke: Stroke, count: int) -> Stroke:
    """Resample to exactly ``count`` arc-equidistant points."""
    if count < 2:
        raise ValueError("need at least 2 points")
    arc = _arc_positions(stroke.points)
    if arc[-1] <= 0:
        raise ValueError("stroke has zero arc length")
    targets = np.linspace(0.0, arc[-1], count)
    return Stroke(_sample_at(stroke.points, targets))


def extract_features(stroke: Stroke) -> FeatureSeq:
    """Pair each point with the tangent angle to its successor."""
    pts = stroke.points
    diffs = pts[1:] - pts[:-1]
    angles = np.arctan2(diffs[:, 1], diffs[:, 0])
    data = np.column_stack([pts[:-1], angles])
    return FeatureSeq(data, pts[-1].copy(), source_len=len(pts))
