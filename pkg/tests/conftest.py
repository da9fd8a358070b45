import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chessboard.scalar import ExactScalar

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
scalars = st.lists(small_fraction, min_size=8, max_size=8).map(ExactScalar.from_coefficients)
qj_scalars = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(
    lambda t: ExactScalar(t[0]) + ExactScalar.zeta_power(8) * t[1])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
