import numpy as np
import pytest

from inkmatch import dichotomous_eval, kfold_cv, make_dataset
from inkmatch.evaluate import writer_folds


@pytest.fixture(scope="module")
def dataset():
    return make_dataset(classes=4, writers=8, repeats=2, seed=3)


def _strip_timing(report):
    d = report.to_dict()
    d.pop("mean_time_per_char")
    for f in d.get("folds", []):
        f.pop("mean_time_per_char")
    return d


class TestDichotomous:
    def test_split_counts_and_disjointness(self, dataset):
        report = dichotomous_eval(dataset, train_writers=5, seed=1)
        assert set(report.train_writers) & set(report.test_writers) == set()
        assert len(report.train_writers) == 5
        assert len(report.test_writers) == 3
        # 3 test writers x 4 classes x 2 repeats
        assert report.total == 24

    def test_paper_shaped_split_sizes(self):
        ds = make_dataset(classes=2, writers=25, repeats=2, seed=0)
        report = dichotomous_eval(ds, train_writers=15, seed=0)
        assert report.total == 10 * 2 * 2  # 10 held-out writers

    def test_deterministic_given_seed(self, dataset):
        a = dichotomous_eval(dataset, train_writers=5, seed=7)
        b = dichotomous_eval(dataset, train_writers=5, seed=7)
        assert _strip_timing(a) == _strip_timing(b)

    def test_insufficient_writers(self, dataset):
        with pytest.raises(ValueError, match="insufficient writers"):
            dichotomous_eval(dataset, train_writers=8)

    def test_accounting(self, dataset):
        r = dichotomous_eval(dataset, train_writers=5, seed=2)
        assert r.misrecognized + r.rejected == r.total - r.correct
        assert r.error_rate == pytest.approx(100.0 * (r.misrecognized + r.rejected) / r.total)
        assert r.confusion.sum() == r.total
        # confusion rows sum to per-class test counts
        per_class = {}
        test_writers = set(r.test_writers)
        for sym in dataset.symbols:
            if sym.writer in test_writers:
                per_class[sym.label] = per_class.get(sym.label, 0) + 1
        for label, count in per_class.items():
            assert r.confusion[label].sum() == count


class TestKfold:
    def test_fold_partition(self):
        folds = writer_folds(list(range(25)), 5, seed=42)
        assert [len(f) for f in folds] == [5] * 5
        flat = [w for f in folds for w in f]
        assert sorted(flat) == list(range(25))

    def test_leave_one_writer_out_limit(self):
        folds = writer_folds(list(range(6)), 6, seed=0)
        assert all(len(f) == 1 for f in folds)

    def test_k_validation(self, dataset):
        with pytest.raises(ValueError, match="K must be at least 2"):
            kfold_cv(dataset, k=1)
        with pytest.raises(ValueError, match="exceeds"):
            kfold_cv(dataset, k=9)

    def test_each_sample_tested_once(self, dataset):
        report = kfold_cv(dataset, k=4, seed=5)
        assert report.total == len(dataset)
        assert sum(f.total for f in report.folds) == len(dataset)
        tested = [w for f in report.folds for w in f.test_writers]
        assert sorted(tested) == sorted(dataset.writer_ids)

    def test_fold_disjointness_and_accounting(self, dataset):
        report = kfold_cv(dataset, k=4, seed=5)
        for f in report.folds:
            assert set(f.train_writers) & set(f.test_writers) == set()
            assert f.misrecognized + f.rejected == f.total - f.correct
        assert report.misrecognized + report.rejected == report.total - report.correct
        assert report.mean_fold_error_rate == pytest.approx(
            np.mean([f.error_rate for f in report.folds])
        )

    def test_deterministic_given_seed(self, dataset):
        a = kfold_cv(dataset, k=4, seed=11)
        b = kfold_cv(dataset, k=4, seed=11)
        assert _strip_timing(a) == _strip_timing(b)

    def test_prune_toggle_changes_work_not_outcome(self, dataset):
        fast = kfold_cv(dataset, k=4, seed=11)
        slow = kfold_cv(dataset, k=4, seed=11, prune=False)
        assert fast.error_rate == slow.error_rate
        assert fast.full_dtw_calls <= slow.full_dtw_calls
        assert slow.full_dtw_calls == slow.candidates_seen
