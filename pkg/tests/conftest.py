import os

import hypothesis
import pytest
from hypothesis import strategies as st

from jacsplit.ff import field
from jacsplit.jacobian import curve_new

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

PRIMES = [3, 5, 7, 11, 13, 10007]


def elements(p):
    F = field(p)
    return st.builds(F, st.integers(0, p - 1), st.integers(0, p - 1))


@st.composite
def field_and_elements(draw, n=2, primes=PRIMES):
    p = draw(st.sampled_from(primes))
    return field(p), [draw(elements(p)) for _ in range(n)]


@pytest.fixture
def ell11():
    """y^2 = x(x-1)(x-3) over F_11."""
    return curve_new(11, 1, [0, 1, 3])


@pytest.fixture
def g2_p5():
    return curve_new(5, 2, [0, 1, 2, 3, 4])


@pytest.fixture
def g2_p13():
    return curve_new(13, 2, [0, 1, 2, 5, 7])


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Append (criterion, ok, detail); printed in the terminal summary."""
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
