import sys

import pytest

from frechet1d.core import TimeSeries


def ts(*vals):
    return TimeSeries(list(vals))


@pytest.fixture
def series():
    return ts


def pytest_report_header(config):
    from frechet1d.reach import KERNEL

    return f"frechet1d kernel: {KERNEL}"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for no in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[no])
