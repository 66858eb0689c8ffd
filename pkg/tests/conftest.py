import numpy as np
import pytest
from hypothesis import settings

from nonlocal_osc.core import ModeCoeffs, PhysicalParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def unit_params():
    return PhysicalParams(1.0, 1.0)


@pytest.fixture
def cosine_state():
    """a_0 = a_{-1} = sqrt(alpha/2) with alpha = 1: q(t) = cos(pi t / 2)."""
    s = np.sqrt(0.5)
    return ModeCoeffs.from_dict({0: s, -1: s})


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
