import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance_failures = []


def pytest_runtest_logreport(report):
    if report.when == "call" and report.failed and \
            "test_acceptance.py" in report.nodeid:
        _acceptance_failures.append(report.nodeid)


def pytest_terminal_summary(terminalreporter):
    for nodeid in _acceptance_failures:
        terminalreporter.write_line(f"[FAIL] {nodeid}")
