import pytest

_ACCEPTANCE: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        previous = _ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
        _ACCEPTANCE[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
