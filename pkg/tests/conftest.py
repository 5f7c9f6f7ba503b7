import numpy as np
import pytest

from divclust import DissimilarityMatrix, euclidean_from_data


@pytest.fixture
def line4() -> DissimilarityMatrix:
    """Four points on a line at 0, 1, 10, 11: two tight pairs far apart."""
    return euclidean_from_data(np.array([[0.0], [1.0], [10.0], [11.0]]))


def random_matrix(seed: int, n: int, low: float = 0.05, high: float = 1.0):
    """A random dissimilarity matrix plus its raw values for oracle use."""
    rng = np.random.default_rng(seed)
    values = rng.uniform(low, high, n * (n - 1) // 2)
    return DissimilarityMatrix(n, values), [float(v) for v in values]


def random_points(seed: int, n: int, p: int) -> np.ndarray:
    return np.random.default_rng(seed).uniform(0.0, 1.0, (n, p))
