"""Engine configuration: every tuning knob in one place.

Config values travel with trained models (snapshotted into the model file)
so that recognition always runs with the same preprocessing and matching
parameters the templates were built with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class EngineConfig:
    # preprocessing
    resample_spacing: float = 0.02
    dedupe_eps: float = 1e-6
    # matching
    angle_weight: float = 0.5 / math.pi**2
    reach_fraction: float = 0.1
    # spatial predicates
    shiro_min_width_frac: float = 0.5
    shiro_max_height_frac: float = 0.2
    shiro_top_frac: float = 0.4
    ec_eps: float = 0.01
    # template learning
    cluster_threshold: float = 0.05
    # recognition
    reject_threshold: float = 0.25
    group_penalty: float = 0.1
    region_penalty: float = 0.05

    # dotted names used in model files and on the wire
    _KEYS = {
        "resample_spacing": "preprocess.resample_spacing",
        "dedupe_eps": "preprocess.dedupe_eps",
        "angle_weight": "match.angle_weight",
        "reach_fraction": "match.reach_fraction",
        "shiro_min_width_frac": "spatial.shiro_min_width_frac",
        "shiro_max_height_frac": "spatial.shiro_max_height_frac",
        "shiro_top_frac": "spatial.shiro_top_frac",
        "ec_eps": "spatial.ec_eps",
        "cluster_threshold": "cluster.threshold",
        "reject_threshold": "recognize.reject_threshold",
        "group_penalty": "recognize.group_penalty",
        "region_penalty": "recognize.region_penalty",
    }

    @property
    def point_count(self) -> int:
        """Common resampled point count per stroke; all feature sequences
        end up one shorter, which keeps them envelope-comparable."""
        return int(round(1.0 / self.resample_spacing)) + 1

    @property
    def feature_len(self) -> int:
        return self.point_count - 1

    def reach(self, seq_len: int) -> int:
        return int(math.ceil(self.reach_fraction * seq_len))

    def to_dict(self) -> dict[str, float]:
        return {self._KEYS[f.name]: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, d: dict[str, float]) -> "EngineConfig":
        by_key = {v: k for k, v in cls._KEYS.items()}
        kwargs = {}
        for key, value in d.items():
            if key not in by_key:
                raise ValueError(f"unknown config key: {key}")
            kwargs[by_key[key]] = float(value)
        return cls(**kwargs)
