import numpy as np
import pytest

from chaincover.field import field_for_order
from chaincover.linalg import CodeMatrix

# chained matrix of RM(1,3) and a worked word to cover
RM13_ROWS_LIST = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
]
V0 = [1, 0, 0, 1, 1, 1, 0, 1]


@pytest.fixture
def gf2():
    return field_for_order(2).base


@pytest.fixture
def rm13_gamma(gf2):
    return CodeMatrix(gf2, RM13_ROWS_LIST)


@pytest.fixture
def v0():
    return np.array(V0)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, (outcome, duration) in _acceptance.items():
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
