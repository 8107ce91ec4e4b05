import re

_RESULTS: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\w+?)_", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome == "failed":
        _RESULTS[m.group(1)] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        status, secs = _RESULTS[label]
        terminalreporter.write_line(f"criterion {label}: {status} [{secs:.1f}s]")
