"""Template learning: group by stroke count, cluster same-region strokes,
and synthesize representatives by warping-path averaging.

A trained model holds, per (class, stroke-count group, region), the cluster
representatives of all training strokes that landed in that bucket. Merging
two strokes averages their aligned positions (weighted by how many strokes
each side already absorbed) and re-derives the tangent angles from the
averaged geometry, then resamples back to the common length so every
template stays envelope-comparable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .config import EngineConfig
from .dtw import dtw_distance
from .features import FeatureSeq, extract_features, resample_stroke_to
from .ink import Dataset, InkSymbol, ModelFormatError, Stroke
from .pipeline import prepare_symbol
from .spatial import Region

MODEL_VERSION = 1


@dataclass(frozen=True)
class Template:
    template_id: str
    features: FeatureSeq
    region: Region
    label: int
    group: int
    member_count: int

    def __post_init__(self):
        if self.member_count < 1:
            raise ValueError("member_count must be at least 1")


@dataclass(frozen=True)
class Model:
    """classes[label][stroke_count][region] -> tuple of templates."""

    classes: dict[int, dict[int, dict[Region, tuple[Template, ...]]]]
    config: EngineConfig
    version: int = MODEL_VERSION

    def template_count(self) -> int:
        return sum(1 for _ in self.iter_templates())

    def iter_templates(self) -> Iterator[Template]:
        for groups in self.classes.values():
            for regions in groups.values():
                for templates in regions.values():
                    yield from templates

    def bucket(self, label: int, group: int, region: Region) -> tuple[Template, ...]:
        return self.classes.get(label, {}).get(group, {}).get(region, ())


def group_by_stroke_count(symbols: Sequence[InkSymbol]) -> dict[int, list[InkSymbol]]:
    """Partition same-class symbols by how many strokes completed them."""
    labels = {s.label for s in symbols if s.label is not None}
    if len(labels) > 1:
        raise ValueError(f"symbols span multiple classes: {sorted(labels)}")
    groups: dict[int, list[InkSymbol]] = {}
    for sym in symbols:
        groups.setdefault(sym.stroke_count, []).append(sym)
    return groups


def merge_features(
    a: FeatureSeq,
    b: FeatureSeq,
    wa: float = 1.0,
    wb: float = 1.0,
    *,
    angle_weight: float | None = None,
    point_count: int | None = None,
) -> FeatureSeq:
    """Average two strokes along their optimal warping path.

    Positions (endpoint included) are the weight-blended means of the
    aligned pairs; the result is resampled to ``point_count`` points and
    angles come from the averaged polyline, keeping the feature invariant
    that each angle is the direction toward the next sample.
    """
    kwargs = {} if angle_weight is None else {"angle_weight": angle_weight}
    _, path = dtw_distance(a, b, **kwargs)
    pa = a.polyline()
    pb = b.polyline()
    steps = path.steps
    total = wa + wb
    merged = (wa * pa[steps[:, 0]] + wb * pb[steps[:, 1]]) / total
    end = (wa * pa[-1] + wb * pb[-1]) / total
    pts = np.vstack([merged, end[None, :]])
    count = point_count if point_count is not None else max(len(a), len(b)) + 1
    if pts.shape[0] == count:
        # diagonal alignment: already at the standard length, and skipping
        # the re-parameterization keeps merge(x, x) == x exactly
        stroke = Stroke(pts)
    else:
        stroke = resample_stroke_to(Stroke(pts), count)
    return extract_features(stroke)


def cluster_strokes(
    strokes: Sequence[FeatureSeq],
    threshold: float,
    *,
    angle_weight: float | None = None,
    point_count: int | None = None,
    trace: list | None = None,
) -> list[tuple[FeatureSeq, int]]:
    """Agglomerate strokes until the closest pair of representatives is
    farther apart than ``threshold``.

    Each merge replaces the two closest representatives (lowest-index pair
    on ties) with their member-count-weighted average. Returns
    (representative, member_count) pairs in stable order; member counts
    always sum to the input count.
    """
    if len(strokes) == 0:
        raise ValueError("no strokes to cluster")
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    kwargs = {} if angle_weight is None else {"angle_weight": angle_weight}

    reps: list[FeatureSeq] = list(strokes)
    counts: list[int] = [1] * len(reps)

    n = len(reps)
    dist = np.full((n, n), np.inf)
    for i in range(n):
        for j in range(i + 1, n):
            dist[i, j], _ = dtw_distance(reps[i], reps[j], **kwargs)

    while len(reps) > 1:
        n = len(reps)
        flat = np.argmin(dist[:n, :n])
        i, j = divmod(int(flat), n)
        if dist[i, j] > threshold:
            break
        if trace is not None:
            trace.append((i, j, float(dist[i, j])))
        merged = merge_features(
            reps[i], reps[j], counts[i], counts[j],
            point_count=point_count, **kwargs,
        )
        reps[i] = merged
        counts[i] += counts[j]
        del reps[j]
        del counts[j]
        dist = np.delete(np.delete(dist, j, axis=0), j, axis=1)
        for k in range(len(reps)):
            if k == i:
                continue
            lo, hi = (k, i) if k < i else (i, k)
            dist[lo, hi], _ = dtw_distance(reps[lo], reps[hi], **kwargs)
    return list(zip(reps, counts))


def build_model(dataset: Dataset, config: EngineConfig | None = None) -> Model:
    """Train a template model from a labeled dataset."""
    config = config or EngineConfig()
    by_class: dict[int, list[InkSymbol]] = {c: [] for c in range(dataset.class_count)}
    for idx, sym in enumerate(dataset.symbols):
        if sym.label is None:
            raise ValueError(f"symbol {idx} is unlabeled; training needs labels")
        by_class[sym.label].append(sym)
    for label, syms in by_class.items():
        if not syms:
            raise ValueError(f"class {label} has no symbols")

    classes: dict[int, dict[int, dict[Region, tuple[Template, ...]]]] = {}
    for label in sorted(by_class):
        groups_out: dict[int, dict[Region, tuple[Template, ...]]] = {}
        for count, syms in sorted(group_by_stroke_count(by_class[label]).items()):
            buckets: dict[Region, list[FeatureSeq]] = {}
            for sym in syms:
                prep = prepare_symbol(sym, config)
                for feat, region in zip(prep.features, prep.regions):
                    buckets.setdefault(region, []).append(feat)
            regions_out: dict[Region, tuple[Template, ...]] = {}
            for region in sorted(buckets, key=lambda r: r.value):
                clusters = cluster_strokes(
                    buckets[region],
                    config.cluster_threshold,
                    angle_weight=config.angle_weight,
                    point_count=config.point_count,
                )
                regions_out[region] = tuple(
                    Template(
                        template_id=f"{label}/{count}/{region.value}/{i}",
                        features=feat,
                        region=region,
                        label=label,
                        group=count,
                        member_count=members,
                    )
                    for i, (feat, members) in enumerate(clusters)
                )
            groups_out[count] = regions_out
        classes[label] = groups_out
    return Model(classes=classes, config=config)


# ---------------------------------------------------------------------------
# model persistence
# ---------------------------------------------------------------------------

def _template_to_json(t: Template) -> dict:
    return {
        "id": t.template_id,
        "member_count": t.member_count,
        "source_len": t.features.source_len,
        "end": t.features.end.tolist(),
        "features": t.features.data.tolist(),
    }


def _template_from_json(obj: dict, label: int, group: int, region: Region) -> Template:
    feat = FeatureSeq(
        np.array(obj["features"], dtype=np.float64),
        np.array(obj["end"], dtype=np.float64),
        source_len=int(obj["source_len"]),
    )
    return Template(
        template_id=str(obj["id"]),
        features=feat,
        region=region,
        label=label,
        group=group,
        member_count=int(obj["member_count"]),
    )


def model_to_json(model: Model) -> dict:
    classes = []
    for label in sorted(model.classes):
        groups = []
        for count in sorted(model.classes[label]):
            regions = []
            for region in sorted(model.classes[label][count], key=lambda r: r.value):
                regions.append(
                    {
                        "region": region.value,
                        "templates": [
                            _template_to_json(t)
                            for t in model.classes[label][count][region]
                        ],
                    }
                )
            groups.append({"strokes": count, "regions": regions})
        classes.append({"label": label, "groups": groups})
    return {"version": model.version, "config": model.config.to_dict(), "classes": classes}


def model_from_json(doc: dict) -> Model:
    try:
        version = doc["version"]
        if version != MODEL_VERSION:
            raise ModelFormatError(
                f"unsupported model version {version}, expected {MODEL_VERSION}"
            )
        config = EngineConfig.from_dict(doc["config"])
        classes: dict[int, dict[int, dict[Region, tuple[Template, ...]]]] = {}
        for class_entry in doc["classes"]:
            label = int(class_entry["label"])
            groups: dict[int, dict[Region, tuple[Template, ...]]] = {}
            for group_entry in class_entry["groups"]:
                count = int(group_entry["strokes"])
                regions: dict[Region, tuple[Template, ...]] = {}
                for region_entry in group_entry["regions"]:
                    region = Region(region_entry["region"])
                    regions[region] = tuple(
                        _template_from_json(t, label, count, region)
                        for t in region_entry["templates"]
                    )
                groups[count] = regions
            classes[label] = groups
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"corrupt model: {e}") from e
    model = Model(classes=classes, config=config, version=int(version))
    if model.template_count() == 0:
        raise ModelFormatError("empty model")
    return model


def save_model(model: Model, path: str | Path) -> None:
    if model.template_count() == 0:
        raise ModelFormatError("empty model")
    Path(path).write_text(json.dumps(model_to_json(model)), encoding="utf-8")


def load_model(path: str | Path) -> Model:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"corrupt model: {e.msg}") from e
    return model_from_json(doc)
