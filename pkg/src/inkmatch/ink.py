"""Domain types and dataset serialization.

Ink files are UTF-8, one symbol per line as a JSON object:

    {"label": int|null, "writer": int|null, "strokes": [[[x,y], ...], ...]}

Points may optionally carry a third component, a timestamp in seconds since
symbol start. All types are immutable after construction (point arrays are
marked read-only), so symbols and datasets can be shared freely across
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np


class InkError(Exception):
    """Base for ink/model file problems."""


class InkParseError(InkError):
    """Raised when an ink file line cannot be parsed or validated."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ModelFormatError(InkError):
    """Raised for corrupt, empty, or version-incompatible model files."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Stroke:
    """One pen-down..pen-up trace: an ordered (n, 2) array of x,y samples,
    optionally with per-point timestamps."""

    points: np.ndarray
    times: np.ndarray | None = None

    def __post_init__(self):
        pts = _freeze(np.atleast_2d(self.points))
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError(f"stroke points must be (n, 2), got {pts.shape}")
        if pts.shape[0] < 2:
            raise ValueError("stroke has fewer than 2 points")
        if not np.isfinite(pts).all():
            raise ValueError("stroke contains non-finite coordinates")
        object.__setattr__(self, "points", pts)
        if self.times is not None:
            t = _freeze(self.times)
            if t.shape != (pts.shape[0],):
                raise ValueError("times length does not match point count")
            if (t < 0).any():
                raise ValueError("timestamps must be non-negative")
            object.__setattr__(self, "times", t)

    def __len__(self) -> int:
        return self.points.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Stroke):
            return NotImplemented
        if not np.array_equal(self.points, other.points):
            return False
        if (self.times is None) != (other.times is None):
            return False
        return self.times is None or np.array_equal(self.times, other.times)


@dataclass(frozen=True)
class InkSymbol:
    """One handwritten character instance: strokes in writing order."""

    strokes: tuple[Stroke, ...]
    label: int | None = None
    writer: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strokes", tuple(self.strokes))
        if not self.strokes:
            raise ValueError("symbol has no strokes")

    @property
    def stroke_count(self) -> int:
        return len(self.strokes)


@dataclass(frozen=True)
class Dataset:
    symbols: tuple[InkSymbol, ...]
    class_count: int
    writer_ids: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "writer_ids", frozenset(self.writer_ids))
        if not self.symbols:
            raise ValueError("empty dataset")
        if self.class_count <= 0:
            raise ValueError("class_count must be positive")

    def __len__(self) -> int:
        return len(self.symbols)

    def subset(self, writers: Iterable[int]) -> "Dataset":
        keep = frozenset(writers)
        symbols = tuple(s for s in self.symbols if s.writer in keep)
        if not symbols:
            raise ValueError("writer subset selects no symbols")
        return Dataset(symbols, self.class_count, keep)


def symbol_from_json(obj: dict) -> InkSymbol:
    """Build a validated InkSymbol from one parsed ink-format object."""
    if not isinstance(obj, dict):
        raise ValueError("symbol must be a JSON object")
    raw_strokes = obj.get("strokes")
    if not isinstance(raw_strokes, list) or not raw_strokes:
        raise ValueError("symbol needs a non-empty 'strokes' list")
    strokes = []
    for i, raw in enumerate(raw_strokes):
        if not isinstance(raw, list) or len(raw) < 2:
            raise ValueError(f"stroke {i} needs at least 2 points")
        pts, times = [], []
        for p in raw:
            if not isinstance(p, list) or len(p) not in (2, 3):
                raise ValueError(f"stroke {i} has a malformed point: {p!r}")
            pts.append((float(p[0]), float(p[1])))
            if len(p) == 3:
                times.append(float(p[2]))
        if times and len(times) != len(pts):
            raise ValueError(f"stroke {i} mixes timed and untimed points")
        strokes.append(Stroke(np.array(pts), np.array(times) if times else None))
    label = obj.get("label")
    writer = obj.get("writer")
    return InkSymbol(
        tuple(strokes),
        label=None if label is None else int(label),
        writer=None if writer is None else int(writer),
    )


def symbol_to_json(symbol: InkSymbol) -> dict:
    strokes = []
    for s in symbol.strokes:
        if s.times is None:
            strokes.append([[x, y] for x, y in s.points.tolist()])
        else:
            strokes.append(
                [[x, y, t] for (x, y), t in zip(s.points.tolist(), s.times.tolist())]
            )
    return {"label": symbol.label, "writer": symbol.writer, "strokes": strokes}


def load_dataset(path: str | Path, expected_classes: int | None = None) -> Dataset:
    """Load and validate a line-delimited ink file.

    ``expected_classes`` pins the class inventory; when omitted it is
    inferred as ``max(label) + 1``. Every symbol must carry a writer id,
    and labeled symbols must stay inside the inventory.
    """
    path = Path(path)
    symbols: list[InkSymbol] = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise InkParseError(f"invalid JSON: {e.msg}", line=lineno) from e
            try:
                symbols.append(symbol_from_json(obj))
            except ValueError as e:
                raise InkParseError(str(e), line=lineno) from e
    if not symbols:
        raise InkParseError("empty dataset")

    labels = [s.label for s in symbols if s.label is not None]
    class_count = expected_classes
    if class_count is None:
        if not labels:
            raise InkParseError("dataset has no labeled symbols and no declared class count")
        class_count = max(labels) + 1
    for idx, sym in enumerate(symbols):
        if sym.label is not None and not (0 <= sym.label < class_count):
            raise InkParseError(
                f"symbol {idx} has label {sym.label}, outside the {class_count}-class inventory"
            )
        if sym.writer is None:
            raise InkParseError(f"symbol {idx} has no writer id")
    writer_ids = frozenset(s.writer for s in symbols)
    return Dataset(tuple(symbols), class_count, writer_ids)


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for sym in dataset.symbols:
            fh.write(json.dumps(symbol_to_json(sym)) + "\n")
