import numpy as np
import pytest

from inkmatch import (
    InkSymbol,
    Stroke,
    dedupe_points,
    extract_features,
    normalize_symbol,
    resample_stroke,
    resample_stroke_to,
)


def stroke(*pts):
    return Stroke(np.array(pts, dtype=float))


class TestDedupe:
    def test_removes_exact_duplicates(self):
        s = dedupe_points(stroke((0, 0), (0, 0), (1, 1)))
        assert s.points.tolist() == [[0, 0], [1, 1]]

    def test_identity_when_clean(self):
        s = stroke((0, 0), (1, 1))
        assert dedupe_points(s) is s

    def test_degenerate_stroke(self):
        with pytest.raises(ValueError, match="degenerate stroke"):
            dedupe_points(stroke((5, 5), (5, 5), (5, 5)))

    def test_keeps_times_aligned(self):
        s = Stroke(np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]]),
                   times=np.array([0.0, 0.1, 0.2]))
        out = dedupe_points(s)
        assert out.times.tolist() == [0.0, 0.2]


class TestNormalize:
    def test_wide_symbol_centers_short_axis(self):
        sym = InkSymbol((stroke((0, 0), (200, 100)),))
        out = normalize_symbol(sym)
        assert out.strokes[0].points.tolist() == [[0.0, 0.25], [1.0, 0.75]]

    def test_unit_box_unchanged(self):
        sym = InkSymbol((stroke((0, 0), (1, 1)),))
        out = normalize_symbol(sym)
        np.testing.assert_allclose(out.strokes[0].points, [[0, 0], [1, 1]])

    def test_zero_extent_rejected(self):
        sym = InkSymbol((stroke((3, 3), (3, 3)), stroke((3, 3), (3, 3))))
        with pytest.raises(ValueError, match="zero-extent"):
            normalize_symbol(sym)

    def test_relative_stroke_positions_preserved(self, rng):
        a = stroke((0, 0), (10, 0))
        b = stroke((0, 20), (10, 20))
        out = normalize_symbol(InkSymbol((a, b)))
        ya = out.strokes[0].points[0, 1]
        yb = out.strokes[1].points[0, 1]
        assert yb > ya  # order along y survives


class TestResample:
    def test_straight_segment(self):
        s = resample_stroke(stroke((0, 0), (1, 0)), 0.25)
        assert s.points[:, 0].tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_spacing_at_or_beyond_length(self):
        s = resample_stroke(stroke((0, 0), (1, 0)), 2.0)
        assert s.points.tolist() == [[0, 0], [1, 0]]

    def test_l_shape(self):
        s = resample_stroke(stroke((0, 0), (1, 0), (1, 1)), 0.5)
        assert len(s) == 5
        np.testing.assert_allclose(s.points[3], [1.0, 0.5])

    def test_fixed_count_is_equidistant(self, rng):
        # a straight stroke makes chord length equal arc length
        direction = rng.normal(0, 1, size=2)
        pts = np.outer(np.array([0.0, 0.3, 1.0]), direction)
        s = resample_stroke_to(Stroke(pts), 33)
        assert len(s) == 33
        seg = np.sqrt(((s.points[1:] - s.points[:-1]) ** 2).sum(axis=1))
        np.testing.assert_allclose(seg, seg[0], rtol=1e-9)

    def test_endpoints_preserved(self, rng):
        pts = np.cumsum(rng.normal(0, 1, size=(9, 2)), axis=0)
        s = resample_stroke_to(Stroke(pts), 17)
        np.testing.assert_allclose(s.points[0], pts[0])
        np.testing.assert_allclose(s.points[-1], pts[-1])


class TestExtractFeatures:
    def test_horizontal(self):
        f = extract_features(stroke((0, 0), (1, 0)))
        assert f.data.tolist() == [[0.0, 0.0, 0.0]]
        assert f.source_len == 2

    def test_vertical_up(self):
        f = extract_features(stroke((0, 0), (0, 1)))
        assert f.data[0, 2] == pytest.approx(np.pi / 2)

    def test_tent(self):
        f = extract_features(stroke((0, 0), (1, 1), (2, 0)))
        np.testing.assert_allclose(
            f.data, [[0, 0, np.pi / 4], [1, 1, -np.pi / 4]]
        )
        assert f.end.tolist() == [2.0, 0.0]

    def test_length_is_points_minus_one(self, rng):
        for n in (2, 5, 17):
            pts = np.cumsum(rng.normal(0, 1, size=(n, 2)), axis=0)
            assert len(extract_features(Stroke(pts))) == n - 1

    def test_angles_translation_invariant(self, rng):
        pts = np.cumsum(rng.normal(0, 1, size=(12, 2)), axis=0)
        f0 = extract_features(Stroke(pts))
        f1 = extract_features(Stroke(pts + np.array([3.5, -2.0])))
        np.testing.assert_allclose(f0.angles, f1.angles)
        assert not np.allclose(f0.positions, f1.positions)

    def test_reversal_flips_angles_by_pi(self, rng):
        pts = np.cumsum(rng.normal(0, 1, size=(10, 2)), axis=0)
        fwd = extract_features(Stroke(pts))
        rev = extract_features(Stroke(pts[::-1]))
        flipped = (rev.angles[::-1] + np.pi) % (2 * np.pi)
        expected = (fwd.angles + 2 * np.pi) % (2 * np.pi)
        np.testing.assert_allclose(flipped, expected, atol=1e-12)

    def test_polyline_reconstructs_points(self):
        pts = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 0.5]])
        f = extract_features(Stroke(pts))
        np.testing.assert_array_equal(f.polyline(), pts)
