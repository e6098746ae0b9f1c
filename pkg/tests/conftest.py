import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperideal import structures as st  # noqa: E402


@pytest.fixture
def madar():
    return st.madar()


@pytest.fixture
def weak():
    return st.weak_ring()


@pytest.fixture
def haji():
    return st.haji()


@pytest.fixture(scope="session")
def small_rings():
    """Every valid Z_phi ring with n <= 6, |phi| <= 3, plus the printed Z4 example."""
    return [st.madar()] + st.zphi_rings(6, 3)


_CRITERIA: dict = {}


@pytest.fixture
def criterion():
    """Record a criterion verdict; the lines are printed in the terminal summary."""
    def record(number, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        _CRITERIA[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])
