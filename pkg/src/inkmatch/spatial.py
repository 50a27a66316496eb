"""Spatial predicates: bounding boxes, stroke topology, and the 2x3
relational grid anchored on the headline stroke.

Coordinates follow the tablet convention: y grows downward, so "top" means
smaller y. The headline (shirorekha) is a wide, flat stroke near the top of
the symbol; when present, its lower bounding edge splits top from bottom.
Otherwise the frame midline does.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np


class Region(str, Enum):
    TOP_LEFT = "T-L"
    TOP = "T"
    TOP_RIGHT = "T-R"
    BOTTOM_LEFT = "B-L"
    BOTTOM = "B"
    BOTTOM_RIGHT = "B-R"

    @property
    def row(self) -> int:
        return 0 if self.value.startswith("T") else 1

    @property
    def col(self) -> int:
        return {"L": 0, "": 1, "R": 2}[self.value.split("-")[1] if "-" in self.value else ""]


_GRID = {
    (0, 0): Region.TOP_LEFT,
    (0, 1): Region.TOP,
    (0, 2): Region.TOP_RIGHT,
    (1, 0): Region.BOTTOM_LEFT,
    (1, 1): Region.BOTTOM,
    (1, 2): Region.BOTTOM_RIGHT,
}


def region_at(row: int, col: int) -> Region:
    return _GRID[(row, col)]


class TopoRelation(str, Enum):
    DISCONNECTED = "DC"
    EXTERNALLY_CONNECTED = "EC"
    OVERLAP_INTERSECT = "OI"


@dataclass(frozen=True)
class Rect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ValueError("inverted rectangle")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin


def _pts(stroke) -> np.ndarray:
    pts = getattr(stroke, "points", stroke)
    pts = np.asarray(pts, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] == 0:
        raise ValueError("expected a non-empty (n, 2) point array")
    return pts


def mbr(stroke) -> Rect:
    pts = _pts(stroke)
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    return Rect(lo[0], lo[1], hi[0], hi[1])


def joint_mbr(strokes: Sequence) -> Rect:
    pts = np.vstack([_pts(s) for s in strokes])
    return mbr(pts)


def centroid(stroke) -> np.ndarray:
    return _pts(stroke).mean(axis=0)


def _point_segment_dist(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distances from points p (n,2) to segments a->b (m,2): (n, m)."""
    ab = b - a  # (m, 2)
    ap = p[:, None, :] - a[None, :, :]  # (n, m, 2)
    denom = (ab * ab).sum(axis=1)  # (m,)
    t = (ap * ab[None, :, :]).sum(axis=2)
    t = np.divide(t, denom[None, :], out=np.zeros_like(t), where=denom[None, :] > 0)
    t = np.clip(t, 0.0, 1.0)
    closest = a[None, :, :] + t[:, :, None] * ab[None, :, :]
    d = p[:, None, :] - closest
    return np.sqrt((d * d).sum(axis=2))


def _proper_crossing(a1, a2, b1, b2) -> bool:
    """True when some segment pair crosses transversally or overlaps
    collinearly over a positive length. Segment arrays are (n,2)/(n,2) and
    (m,2)/(m,2); all pairs are checked at once."""
    d1 = (a2 - a1)[:, None, :]  # (n, 1, 2)
    d2 = (b2 - b1)[None, :, :]  # (1, m, 2)
    r = b1[None, :, :] - a1[:, None, :]  # (n, m, 2)

    def cross(u, v):
        return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]

    o1 = cross(d1, r)  # b1 relative to segment a
    o2 = cross(d1, b2[None, :, :] - a1[:, None, :])
    o3 = cross(d2, -r)  # a1 relative to segment b
    o4 = cross(d2, a2[:, None, :] - b1[None, :, :])
    strict = (o1 * o2 < 0) & (o3 * o4 < 0)
    if strict.any():
        return True

    # collinear pairs: overlap of positive length counts as intersection
    tol = 1e-12
    col = (np.abs(o1) <= tol) & (np.abs(o2) <= tol) & (np.abs(o3) <= tol) & (np.abs(o4) <= tol)
    if not col.any():
        return False
    axis = np.abs(d1).argmax(axis=2)  # dominant axis per a-segment
    for i, j in zip(*np.nonzero(col)):
        k = axis[i, 0]
        lo_a, hi_a = sorted((a1[i, k], a2[i, k]))
        lo_b, hi_b = sorted((b1[j, k], b2[j, k]))
        if min(hi_a, hi_b) - max(lo_a, lo_b) > tol:
            return True
    return False


def topological_relation(s1, s2, eps: float = 0.01) -> TopoRelation:
    """Classify two strokes as overlapping/intersecting, externally
    connected (contact within ``eps`` without crossing), or disconnected."""
    p = _pts(s1)
    q = _pts(s2)
    a1, a2 = p[:-1], p[1:]
    b1, b2 = q[:-1], q[1:]
    if len(a1) and len(b1) and _proper_crossing(a1, a2, b1, b2):
        return TopoRelation.OVERLAP_INTERSECT
    # non-crossing segments attain their minimum distance at an endpoint
    d = np.inf
    if len(b1):
        d = min(d, _point_segment_dist(p, b1, b2).min())
    if len(a1):
        d = min(d, _point_segment_dist(q, a1, a2).min())
    if d <= eps:
        return TopoRelation.EXTERNALLY_CONNECTED
    return TopoRelation.DISCONNECTED


def find_shirorekha(
    strokes: Sequence,
    frame: Rect | None = None,
    *,
    min_width_frac: float = 0.5,
    max_height_frac: float = 0.2,
    top_frac: float = 0.4,
) -> int | None:
    """Index of the first stroke (writing order) that looks like the
    headline: wide, flat, and near the top of the symbol frame."""
    if frame is None:
        frame = joint_mbr(strokes)
    for i, s in enumerate(strokes):
        box = mbr(s)
        if box.width < min_width_frac * frame.width:
            continue
        if box.height > max_height_frac * frame.height:
            continue
        cy = centroid(s)[1]
        if cy <= frame.ymin + top_frac * frame.height:
            return i
    return None


def region_of(stroke, frame: Rect, band_y: float) -> Region:
    """Assign one of the six grid regions by centroid.

    Columns are thirds of the frame width (left-closed intervals, so a
    centroid on a boundary belongs to the interval starting there); the row
    is top when the centroid sits at or above ``band_y``.
    """
    cx, cy = centroid(stroke)
    if frame.width > 0:
        col = int(np.floor((cx - frame.xmin) / frame.width * 3.0))
        col = min(max(col, 0), 2)
    else:
        col = 1
    row = 0 if cy <= band_y else 1
    return _GRID[(row, col)]
