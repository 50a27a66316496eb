"""Stroke-number- and stroke-order-free classification against a model.

Every test stroke is matched independently against the templates of its
own spatial region (with fallback to neighboring regions when a bucket is
empty), so the writing order never influences the outcome. A class's score
is the mean of its per-stroke best distances; classes that lack the test
symbol's stroke-count group may still compete through the adjacent groups
at a penalty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dtw import SearchStats, nn_search
from .ink import InkSymbol
from .pipeline import PreparedSymbol, prepare_symbol
from .spatial import Region, region_at
from .templates import Model


@dataclass(frozen=True)
class StrokeMatch:
    stroke: int
    region: Region
    template_id: str
    delta: float

    def to_dict(self) -> dict:
        return {
            "stroke": self.stroke,
            "region": self.region.value,
            "template": self.template_id,
            "delta": self.delta,
        }


@dataclass(frozen=True)
class RecognitionResult:
    ranked: tuple[tuple[int, float], ...]
    rejected: bool
    per_stroke: tuple[StrokeMatch, ...]
    shirorekha: int | None = None

    def to_dict(self) -> dict:
        return {
            "ranked": [{"label": label, "score": score} for label, score in self.ranked],
            "rejected": self.rejected,
            "per_stroke": [m.to_dict() for m in self.per_stroke],
            "shirorekha": self.shirorekha,
        }


def _fallback_stages(region: Region, penalty: float) -> list[tuple[float, list[Region]]]:
    row, col = region.row, region.col
    same_row = [region_at(row, c) for c in (col - 1, col + 1) if 0 <= c <= 2]
    other = 1 - row
    other_row = [region_at(other, c) for c in (col, col - 1, col + 1) if 0 <= c <= 2]
    return [
        (0.0, [region]),
        (penalty, same_row),
        (2.0 * penalty, other_row),
    ]


def recognize_prepared(
    prep: PreparedSymbol,
    model: Model,
    topk: int = 5,
    stats: SearchStats | None = None,
    prune: bool = True,
) -> RecognitionResult:
    config = model.config
    n = prep.stroke_count
    scored: list[tuple[float, int, tuple[StrokeMatch, ...]]] = []

    for label in sorted(model.classes):
        groups = model.classes[label]
        if n in groups:
            options = [(n, 0.0)]
        else:
            options = [(g, config.group_penalty) for g in (n - 1, n + 1) if g in groups]
        best_score = math.inf
        best_matches: tuple[StrokeMatch, ...] = ()
        for group, group_pen in options:
            contributions: list[float] = []
            matches: list[StrokeMatch] = []
            feasible = True
            for s_idx, (feat, region) in enumerate(zip(prep.features, prep.regions)):
                hit = None
                for stage_pen, stage_regions in _fallback_stages(region, config.region_penalty):
                    templates = [
                        t for reg in stage_regions for t in model.bucket(label, group, reg)
                    ]
                    if not templates:
                        continue
                    ranked = nn_search(
                        feat,
                        [t.features for t in templates],
                        angle_weight=config.angle_weight,
                        reach_fraction=config.reach_fraction,
                        stats=stats,
                        prune=prune,
                    )
                    idx, delta = ranked[0]
                    hit = (delta + stage_pen, StrokeMatch(s_idx, region, templates[idx].template_id, delta))
                    break
                if hit is None:
                    feasible = False
                    break
                contributions.append(hit[0])
                matches.append(hit[1])
            if not feasible:
                continue
            score = math.fsum(contributions) / n + group_pen
            if score < best_score:
                best_score = score
                best_matches = tuple(matches)
        if math.isfinite(best_score):
            scored.append((best_score, label, best_matches))

    scored.sort(key=lambda t: (t[0], t[1]))
    ranked = tuple((label, score) for score, label, _ in scored[: max(topk, 0)])
    rejected = not scored or scored[0][0] > config.reject_threshold
    per_stroke = scored[0][2] if scored else ()
    return RecognitionResult(
        ranked=ranked,
        rejected=rejected,
        per_stroke=per_stroke,
        shirorekha=prep.shirorekha,
    )


def recognize(
    symbol: InkSymbol,
    model: Model,
    topk: int = 5,
    stats: SearchStats | None = None,
    prune: bool = True,
) -> RecognitionResult:
    """Preprocess a raw ink symbol with the model's own config and classify it."""
    prep = prepare_symbol(symbol, model.config)
    return recognize_prepared(prep, model, topk=topk, stats=stats, prune=prune)
