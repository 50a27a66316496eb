"""Writer-independent evaluation: dichotomous split and K-fold CV.

Both protocols partition WRITERS, never individual samples, so no writer
ever contributes to both sides of a split. Reports carry the full error
decomposition (misrecognitions + rejections), a per-class confusion matrix
with a trailing rejection column, wall-clock timing, and the number of
full alignments actually computed (so the lower-bound speedup can be
judged independently of the hardware).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .config import EngineConfig
from .dtw import SearchStats
from .ink import Dataset
from .recognizer import recognize
from .templates import build_model


@dataclass
class Report:
    protocol: str
    total: int
    correct: int
    misrecognized: int
    rejected: int
    error_rate: float
    mean_time_per_char: float
    confusion: np.ndarray  # (C, C+1); last column counts rejections
    full_dtw_calls: int
    candidates_seen: int
    seed: int
    train_writers: tuple[int, ...] = ()
    test_writers: tuple[int, ...] = ()
    folds: list["Report"] = field(default_factory=list)
    mean_fold_error_rate: float | None = None

    def to_dict(self) -> dict:
        d = {
            "protocol": self.protocol,
            "total": self.total,
            "correct": self.correct,
            "misrecognized": self.misrecognized,
            "rejected": self.rejected,
            "error_rate": self.error_rate,
            "mean_time_per_char": self.mean_time_per_char,
            "confusion": self.confusion.tolist(),
            "full_dtw_calls": self.full_dtw_calls,
            "candidates_seen": self.candidates_seen,
            "seed": self.seed,
            "train_writers": list(self.train_writers),
            "test_writers": list(self.test_writers),
        }
        if self.folds:
            d["folds"] = [f.to_dict() for f in self.folds]
            d["mean_fold_error_rate"] = self.mean_fold_error_rate
        return d


def _evaluate_split(
    dataset: Dataset,
    train_writers: set[int],
    test_writers: set[int],
    config: EngineConfig,
    protocol: str,
    seed: int,
    prune: bool = True,
) -> Report:
    if train_writers & test_writers:
        raise ValueError("train and test writers overlap")
    train = dataset.subset(train_writers)
    test = dataset.subset(test_writers)

    model = build_model(train, config)
    C = dataset.class_count
    confusion = np.zeros((C, C + 1), dtype=np.int64)
    stats = SearchStats()
    correct = mis = rej = 0
    elapsed = 0.0
    for sym in test.symbols:
        t0 = time.perf_counter()
        result = recognize(sym, model, topk=1, stats=stats, prune=prune)
        elapsed += time.perf_counter() - t0
        if result.rejected or not result.ranked:
            rej += 1
            confusion[sym.label, C] += 1
            continue
        predicted = result.ranked[0][0]
        confusion[sym.label, predicted] += 1
        if predicted == sym.label:
            correct += 1
        else:
            mis += 1

    total = len(test.symbols)
    return Report(
        protocol=protocol,
        total=total,
        correct=correct,
        misrecognized=mis,
        rejected=rej,
        error_rate=100.0 * (mis + rej) / total,
        mean_time_per_char=elapsed / total,
        confusion=confusion,
        full_dtw_calls=stats.full_dtw,
        candidates_seen=stats.candidates,
        seed=seed,
        train_writers=tuple(sorted(train_writers)),
        test_writers=tuple(sorted(test_writers)),
    )


def dichotomous_eval(
    dataset: Dataset,
    train_writers: int = 15,
    seed: int = 0,
    config: EngineConfig | None = None,
    prune: bool = True,
) -> Report:
    """Train on ``train_writers`` randomly drawn writers, test on the rest."""
    config = config or EngineConfig()
    writers = sorted(dataset.writer_ids)
    if len(writers) <= train_writers:
        raise ValueError(
            f"insufficient writers: have {len(writers)}, need more than {train_writers}"
        )
    rng = np.random.default_rng(seed)
    order = [writers[i] for i in rng.permutation(len(writers))]
    train = set(order[:train_writers])
    test = set(order[train_writers:])
    return _evaluate_split(dataset, train, test, config, "dichotomous", seed, prune)


def writer_folds(writers: list[int], k: int, seed: int) -> list[list[int]]:
    """Shuffle writers and split into K near-equal folds."""
    if k < 2:
        raise ValueError("K must be at least 2")
    if k > len(writers):
        raise ValueError(f"K={k} exceeds the {len(writers)} available writers")
    rng = np.random.default_rng(seed)
    order = [writers[i] for i in rng.permutation(len(writers))]
    return [list(part) for part in np.array_split(np.array(order), k)]


def kfold_cv(
    dataset: Dataset,
    k: int = 5,
    seed: int = 0,
    config: EngineConfig | None = None,
    prune: bool = True,
) -> Report:
    """K-fold cross-validation over writer folds; every fold validates once.

    The aggregate report pools the per-fold counts (so the error accounting
    stays exact) and also carries the mean of the per-fold error rates.
    """
    config = config or EngineConfig()
    folds = writer_folds(sorted(dataset.writer_ids), k, seed)
    all_writers = set(dataset.writer_ids)

    reports = []
    for i, fold in enumerate(folds):
        test = set(int(w) for w in fold)
        train = all_writers - test
        reports.append(_evaluate_split(dataset, train, test, config, f"kfold[{i}]", seed, prune))

    C = dataset.class_count
    total = sum(r.total for r in reports)
    correct = sum(r.correct for r in reports)
    mis = sum(r.misrecognized for r in reports)
    rej = sum(r.rejected for r in reports)
    confusion = np.zeros((C, C + 1), dtype=np.int64)
    for r in reports:
        confusion += r.confusion
    return Report(
        protocol="kfold",
        total=total,
        correct=correct,
        misrecognized=mis,
        rejected=rej,
        error_rate=100.0 * (mis + rej) / total,
        mean_time_per_char=sum(r.mean_time_per_char * r.total for r in reports) / total,
        confusion=confusion,
        full_dtw_calls=sum(r.full_dtw_calls for r in reports),
        candidates_seen=sum(r.candidates_seen for r in reports),
        seed=seed,
        folds=reports,
        mean_fold_error_rate=float(np.mean([r.error_rate for r in reports])),
    )
