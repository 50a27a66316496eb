"""Synthetic ink for demos and gating.

The original tablet corpus is not bundled, so this module fabricates a
learnable stand-in: ten distinct character blueprints (several sharing a
stroke count, some hanging from a headline bar, some without one), written
by perturbing every blueprint point with Gaussian noise and shuffling the
stroke order per instance. Blueprints keep stroke centroids away from the
region-grid boundaries so noise cannot flip spatial predicates.
"""

from __future__ import annotations

import numpy as np

from .ink import Dataset, InkSymbol, Stroke


def _line(p0, p1, n=8) -> np.ndarray:
    t = np.linspace(0.0, 1.0, n)[:, None]
    return np.asarray(p0) * (1 - t) + np.asarray(p1) * t


def _arc(center, radius, a0, a1, n=12) -> np.ndarray:
    t = np.linspace(a0, a1, n)
    cx, cy = center
    return np.column_stack([cx + radius * np.cos(t), cy + radius * np.sin(t)])


def _bar() -> np.ndarray:
    return _line((0.05, 0.08), (0.95, 0.08), 8)


def _blueprints() -> list[list[np.ndarray]]:
    pi = np.pi
    return [
        # 0: bar + center stem
        [_bar(), _line((0.5, 0.12), (0.5, 0.92), 8)],
        # 1: bar + left hook
        [_bar(), _arc((0.4, 0.5), 0.26, -0.5 * pi, 0.9 * pi, 12)],
        # 2: bar + two stems
        [_bar(), _line((0.28, 0.12), (0.28, 0.9), 8), _line((0.72, 0.12), (0.72, 0.9), 8)],
        # 3: single vee with uneven arms (centroid clear of the band line)
        [np.vstack([_line((0.1, 0.25), (0.5, 0.95), 7), _line((0.5, 0.95), (0.9, 0.45), 7)[1:]])],
        # 4: single teardrop loop with a tail
        [np.vstack([
            _arc((0.5, 0.42), 0.28, -0.75 * pi, 0.75 * pi, 12),
            _line((0.3, 0.62), (0.5, 0.97), 5),
        ])],
        # 5: bar + right-side loop
        [_bar(), _arc((0.62, 0.55), 0.27, 0.25 * pi, 1.9 * pi, 12)],
        # 6: stem + diagonal reaching below it
        [_line((0.3, 0.15), (0.3, 0.85), 8), _line((0.3, 0.5), (0.88, 1.05), 8)],
        # 7: bar + two short center dashes
        [_bar(), _line((0.36, 0.48), (0.64, 0.48), 6), _line((0.36, 0.82), (0.64, 0.82), 6)],
        # 8: zigzag peak + low-right tick
        [np.vstack([
            _line((0.2, 0.8), (0.42, 0.25), 5),
            _line((0.42, 0.25), (0.6, 0.65), 5)[1:],
            _line((0.6, 0.65), (0.78, 0.25), 5)[1:],
        ]), _line((0.86, 0.88), (0.95, 0.96), 4)],
        # 9: bar + stem + low cup
        [_bar(), _line((0.5, 0.12), (0.5, 0.52), 6), _arc((0.5, 0.72), 0.18, pi, 2 * pi, 9)],
    ]


BLUEPRINTS = _blueprints()


def make_symbol(
    label: int,
    writer: int,
    rng: np.random.Generator,
    noise: float = 0.02,
    shuffle: bool = True,
) -> InkSymbol:
    strokes = []
    for pts in BLUEPRINTS[label]:
        jittered = pts + rng.normal(0.0, noise, size=pts.shape)
        strokes.append(Stroke(jittered))
    if shuffle:
        order = rng.permutation(len(strokes))
        strokes = [strokes[i] for i in order]
    return InkSymbol(tuple(strokes), label=label, writer=writer)


def make_dataset(
    classes: int = 10,
    writers: int = 20,
    repeats: int = 2,
    noise: float = 0.02,
    seed: int = 0,
) -> Dataset:
    if not (1 <= classes <= len(BLUEPRINTS)):
        raise ValueError(f"classes must be in 1..{len(BLUEPRINTS)}")
    rng = np.random.default_rng(seed)
    symbols = []
    for writer in range(writers):
        for label in range(classes):
            for _ in range(repeats):
                symbols.append(make_symbol(label, writer, rng, noise))
    return Dataset(tuple(symbols), class_count=classes, writer_ids=frozenset(range(writers)))
