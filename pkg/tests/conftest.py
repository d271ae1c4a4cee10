import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def ginibre(rng, n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_psd(rng, n, rank=None):
    G = ginibre(rng, n)[:, : (rank or n)]
    return G @ G.conj().T


def E(i, j, n=2):
    M = np.zeros((n, n), dtype=complex)
    M[i - 1, j - 1] = 1.0
    return M


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_parts = st.floats(-10, 10, allow_nan=False, allow_infinity=False, width=64)


@st.composite
def complex_matrices(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    re = draw(arrays(np.float64, (n, n), elements=_parts))
    im = draw(arrays(np.float64, (n, n), elements=_parts))
    return re + 1j * im


@st.composite
def matrix_pairs(draw, min_dim=1, max_dim=3):
    n = draw(st.integers(min_dim, max_dim))
    out = []
    for _ in range(2):
        re = draw(arrays(np.float64, (n, n), elements=_parts))
        im = draw(arrays(np.float64, (n, n), elements=_parts))
        out.append(re + 1j * im)
    return tuple(out)
