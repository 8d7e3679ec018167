import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

dims = st.integers(min_value=1, max_value=4)
entries = st.floats(min_value=-1, max_value=1, allow_nan=False, allow_infinity=False)


@st.composite
def matrices(draw, rows=dims, cols=dims, elements=entries):
    m, n = draw(rows), draw(cols)
    return draw(arrays(np.float64, (m, n), elements=elements))


@st.composite
def vectors(draw, size=st.integers(min_value=1, max_value=8)):
    return draw(arrays(np.float64, (draw(size),), elements=entries))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
