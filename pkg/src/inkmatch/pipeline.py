"""Shared preparation path from raw ink to matchable features.

Training and recognition must see identical preprocessing, so both go
through ``prepare_symbol``: normalize the symbol into the unit box, dedupe
and resample every stroke to the common point count, extract features, and
assign each stroke its spatial region relative to the headline band.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import EngineConfig
from .features import (
    FeatureSeq,
    dedupe_points,
    extract_features,
    normalize_symbol,
    resample_stroke_to,
)
from .ink import InkSymbol
from .spatial import Rect, Region, find_shirorekha, joint_mbr, mbr, region_of


@dataclass(frozen=True)
class PreparedSymbol:
    strokes: tuple[np.ndarray, ...]
    features: tuple[FeatureSeq, ...]
    regions: tuple[Region, ...]
    frame: Rect
    band_y: float
    shirorekha: int | None
    label: int | None = None
    writer: int | None = None

    @property
    def stroke_count(self) -> int:
        return len(self.strokes)


def prepare_symbol(symbol: InkSymbol, config: EngineConfig | None = None) -> PreparedSymbol:
    config = config or EngineConfig()
    sym = normalize_symbol(symbol)
    cleaned = [dedupe_points(s, config.dedupe_eps) for s in sym.strokes]
    resampled = [resample_stroke_to(s, config.point_count) for s in cleaned]
    points = tuple(s.points for s in resampled)

    frame = joint_mbr(points)
    shiro = find_shirorekha(
        points,
        frame,
        min_width_frac=config.shiro_min_width_frac,
        max_height_frac=config.shiro_max_height_frac,
        top_frac=config.shiro_top_frac,
    )
    band_y = mbr(points[shiro]).ymax if shiro is not None else frame.ymin + frame.height / 2.0
    regions = tuple(region_of(p, frame, band_y) for p in points)
    features = tuple(extract_features(s) for s in resampled)
    return PreparedSymbol(
        strokes=points,
        features=features,
        regions=regions,
        frame=frame,
        band_y=band_y,
        shirorekha=shiro,
        label=sym.label,
        writer=sym.writer,
    )
