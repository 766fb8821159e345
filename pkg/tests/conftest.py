from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def rationals(lo=-20, hi=20, max_den=6):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    )


@pytest.fixture
def golden_dir():
    from tridist.lab.selftest import default_golden_dir

    return default_golden_dir()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
