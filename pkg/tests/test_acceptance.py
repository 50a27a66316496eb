"""Acceptance gate: every criterion runs at its stated tolerance and prints
one [PASS]/[FAIL] line. Run with ``pytest -s tests/test_acceptance.py``."""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from inkmatch import (
    InkSymbol,
    SearchStats,
    build_model,
    cluster_strokes,
    dtw_distance,
    envelope,
    kfold_cv,
    lb_keogh,
    make_dataset,
    nn_search,
    recognize,
)

from conftest import random_features, random_smooth_stroke, scalar_features
from oracles import banded_dtw_cost, brute_force_dtw

W = 0.5 / math.pi**2


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}", flush=True)
        raise
    print(f"[PASS] {name}", flush=True)


@pytest.fixture(scope="module")
def gate_dataset():
    return make_dataset(classes=10, writers=20, repeats=2, noise=0.02, seed=20260809)


@pytest.fixture(scope="module")
def gate_model(gate_dataset):
    return build_model(gate_dataset)


@pytest.fixture(scope="module")
def gate_cv(gate_dataset):
    t0 = time.perf_counter()
    report = kfold_cv(gate_dataset, k=5, seed=42)
    return report, time.perf_counter() - t0


def test_dtw_oracle_equivalence():
    with criterion("DTW oracle equivalence (500 scalar pairs, lengths <= 6, exact)"):
        rng = np.random.default_rng(1)
        t0 = time.perf_counter()
        for _ in range(500):
            x = scalar_features(rng.uniform(-2, 2, size=int(rng.integers(1, 7))))
            y = scalar_features(rng.uniform(-2, 2, size=int(rng.integers(1, 7))))
            delta, path = dtw_distance(x, y, angle_weight=W)
            expected = brute_force_dtw(x, y, W)
            # bitwise: the engine applies the same single division by T
            assert delta == expected / path.T
        assert time.perf_counter() - t0 < 10.0


def test_lower_bound_admissibility():
    with criterion("Lower-bound admissibility (1000 pairs x 4 reaches, zero violations)"):
        rng = np.random.default_rng(2)
        violations = 0
        for _ in range(1000):
            m = int(rng.integers(4, 40))
            x = random_features(rng, m)
            y = random_features(rng, m)
            for r in (0, 1, 2, math.ceil(0.1 * m)):
                lb = lb_keogh(envelope(x, r), y)
                if lb > banded_dtw_cost(x, y, r, W) + 1e-9:
                    violations += 1
        assert violations == 0


def test_pruning_exactness_and_effectiveness():
    with criterion("Pruning exactness (100 random sets) and effectiveness (>=90/100 clustered)"):
        rng = np.random.default_rng(3)
        for _ in range(100):
            m = int(rng.integers(8, 20))
            q = random_features(rng, m)
            cands = [random_features(rng, m) for _ in range(int(rng.integers(5, 25)))]
            pruned = nn_search(q, cands, angle_weight=W)
            exhaustive = sorted(
                ((i, dtw_distance(q, c, angle_weight=W)[0]) for i, c in enumerate(cands)),
                key=lambda t: (t[1], t[0]),
            )
            assert pruned[0] == exhaustive[0]

        effective = 0
        for _ in range(100):
            centers = [random_features(rng, 24) * np.array([4.0, 4.0, 1.0]) for _ in range(3)]
            cands = [
                c + rng.normal(0, 0.02, c.shape) for c in centers for _ in range(8)
            ]
            query = centers[0] + rng.normal(0, 0.02, centers[0].shape)
            stats = SearchStats()
            nn_search(query, cands, angle_weight=W, stats=stats)
            if stats.full_dtw < stats.candidates:
                effective += 1
        assert effective >= 90


def test_warp_path_invariants():
    with criterion("Warping-path boundary/monotonicity/continuity on every path"):
        # construction-time validation already rejects bad paths (see
        # test_dtw); here every returned path is re-checked independently
        rng = np.random.default_rng(4)
        for _ in range(300):
            k = int(rng.integers(1, 30))
            l = int(rng.integers(1, 30))
            _, path = dtw_distance(random_features(rng, k), random_features(rng, l))
            steps = path.steps
            assert tuple(steps[0]) == (0, 0)
            assert tuple(steps[-1]) == (k - 1, l - 1)
            if len(steps) > 1:
                inc = np.diff(steps, axis=0)
                assert set(map(tuple, inc)) <= {(0, 1), (1, 0), (1, 1)}
            assert max(k, l) <= path.T <= k + l - 1


def test_permutation_invariance(gate_dataset, gate_model):
    with criterion("Permutation invariance (20 stroke-order shuffles per symbol)"):
        rng = np.random.default_rng(5)
        for sym in gate_dataset.symbols:
            baseline = recognize(sym, gate_model, topk=10).ranked
            for _ in range(20):
                order = rng.permutation(sym.stroke_count)
                shuffled = InkSymbol(
                    tuple(sym.strokes[i] for i in order),
                    label=sym.label,
                    writer=sym.writer,
                )
                assert recognize(shuffled, gate_model, topk=10).ranked == baseline


def test_end_to_end_synthetic_gate(gate_cv):
    with criterion("End-to-end synthetic gate (5-fold CV accuracy >= 95%, < 60 s)"):
        report, elapsed = gate_cv
        accuracy = 100.0 * report.correct / report.total
        assert accuracy >= 95.0, f"accuracy {accuracy:.2f}%"
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_clustering_monotonicity():
    with criterion("Clustering monotonicity over thresholds {0, .02, .05, .1, inf}"):
        rng = np.random.default_rng(6)
        thresholds = (0.0, 0.02, 0.05, 0.1, np.inf)
        for _ in range(3):  # three independent buckets
            feats = [random_smooth_stroke(rng, 21) for _ in range(8)]
            feats += [feats[0], feats[3]]  # duplicates must still collapse at 0
            sizes = [len(cluster_strokes(feats, t, point_count=21)) for t in thresholds]
            assert sizes == sorted(sizes, reverse=True), sizes
            assert sizes[-1] == 1


def test_eval_accounting(gate_cv):
    with criterion("Eval accounting and per-fold writer disjointness"):
        report, _ = gate_cv
        for r in [report] + report.folds:
            assert r.misrecognized + r.rejected == r.total - r.correct
            assert r.confusion.sum() == r.total
            assert set(r.train_writers) & set(r.test_writers) == set()
        tested = [w for f in report.folds for w in f.test_writers]
        assert sorted(tested) == sorted(range(20))
