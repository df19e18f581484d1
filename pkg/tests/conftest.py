import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from topolab.harness import spaces
from topolab.space import discrete, indiscrete, one_point, sierpinski

settings.register_profile(
    "topolab", max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("topolab")

SPACES3 = spaces(3)
SPACES4 = spaces(4)

small_space = st.sampled_from(SPACES3)
space4 = st.sampled_from(SPACES4)


@st.composite
def space_and_subset(draw, pool=SPACES4):
    x = draw(st.sampled_from(pool))
    return x, draw(st.integers(0, x.full))


@st.composite
def space_and_two_subsets(draw, pool=SPACES4):
    x = draw(st.sampled_from(pool))
    return x, draw(st.integers(0, x.full)), draw(st.integers(0, x.full))


@pytest.fixture
def S():
    return sierpinski()


@pytest.fixture
def standard_spaces():
    return [one_point(), sierpinski(), discrete(2), indiscrete(2), discrete(3)]


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.RESULTS:
        terminalreporter.write_line(line)
