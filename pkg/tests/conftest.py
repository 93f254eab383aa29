import re

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        m = re.search(r"::test_c(\d+\w*?)_(\w+)(\[.*\])?$", report.nodeid)
        if m:
            label = f"criterion {m.group(1)} {m.group(2)}{m.group(3) or ''}"
            _acceptance[label] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance.items():
        terminalreporter.write_line(f"{outcome}  {label}")
