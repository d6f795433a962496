import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

import obforge
from obforge import sbd

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = ("u1", "tref", "fig8", "corridor", "cshape", "split")

# acceptance lines collected during the run, printed in the terminal summary
ACCEPTANCE: list[str] = []


@pytest.fixture(params=FIXTURES)
def fixture_name(request):
    return request.param


@pytest.fixture
def tref():
    return obforge.fixture("tref")


@pytest.fixture
def fig8():
    return obforge.fixture("fig8")


@pytest.fixture
def u1():
    return obforge.fixture("u1")


@st.composite
def grid_diagrams(draw, min_size=2, max_size=12):
    n = draw(st.integers(min_size, max_size))
    xs = draw(st.permutations(range(1, n + 1)))
    os = draw(st.permutations(range(1, n + 1)).filter(lambda o: all(a != b for a, b in zip(xs, o))))
    return sbd.from_grid(xs, os)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
