import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("ipcsim", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ipcsim")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


_criteria = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the terminal summary lists them all."""
    def report(number, ok, detail):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _criteria.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criteria, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
