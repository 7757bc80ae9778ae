"""Per-criterion reporting for the acceptance suite.

Tests tagged ``@pytest.mark.criterion(n, title)`` are grouped by ``n``; the
terminal summary prints one PASS/FAIL line per group.
"""

from collections import defaultdict

import pytest

_results: dict[int, list[bool]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _titles[number] = title
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[number].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        outcomes = _results[number]
        passed = sum(outcomes)
        status = "PASS" if passed == len(outcomes) else "FAIL"
        terminalreporter.write_line(
            f"[{status}] criterion {number}: {_titles[number]} ({passed}/{len(outcomes)} checks)"
        )
