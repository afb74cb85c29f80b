import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False, width=64)


@st.composite
def complex_arrays(draw, min_k=1, max_k=40):
    k = draw(st.integers(min_k, max_k))
    re = draw(hnp.arrays(float, k, elements=finite))
    im = draw(hnp.arrays(float, k, elements=finite))
    return re + 1j * im


seeds = st.integers(0, 2**32 - 1)


def rel_err(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    scale = max(np.abs(a).max(initial=0), np.abs(b).max(initial=0), 1e-300)
    return float(np.abs(a - b).max(initial=0) / scale)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


SUITE_BUDGET_SECONDS = 180.0
_session = {}


def pytest_sessionstart(session):
    import time

    _session["start"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    import time

    elapsed = time.perf_counter() - _session.get("start", time.perf_counter())
    ok = elapsed < SUITE_BUDGET_SECONDS
    terminalreporter.write_line(
        f"full suite runtime {'PASS' if ok else 'FAIL'}: {elapsed:.1f} s (budget {SUITE_BUDGET_SECONDS:.0f} s)"
    )
