import numpy as np
import pytest

from inkmatch import Stroke, extract_features, resample_stroke_to


def scalar_features(values) -> np.ndarray:
    """Lift a scalar sequence into the (m, 3) feature layout: the value
    rides the x channel, y and angle stay zero, so the local distance
    reduces to the squared scalar difference."""
    a = np.zeros((len(values), 3))
    a[:, 0] = values
    return a


def random_features(rng: np.random.Generator, m: int) -> np.ndarray:
    a = np.empty((m, 3))
    a[:, :2] = rng.uniform(0.0, 1.0, size=(m, 2))
    a[:, 2] = rng.uniform(-np.pi, np.pi, size=m)
    return a


def random_smooth_stroke(rng: np.random.Generator, points: int = 51):
    """A wandering but continuous stroke, the shape real ink has."""
    steps = rng.normal(0.0, 0.05, size=(24, 2))
    pts = np.cumsum(np.vstack([rng.uniform(0.2, 0.8, size=(1, 2)), steps]), axis=0)
    return extract_features(resample_stroke_to(Stroke(pts), points))


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
