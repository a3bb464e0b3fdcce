import re

import pytest
from hypothesis import settings

settings.register_profile("glkit", deadline=None)
settings.load_profile("glkit")

_acceptance_results: dict[str, tuple[int, str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or "").strip().splitlines()
    label = doc[0] if doc else item.name
    m = re.match(r"test_c(\d+)", item.name)
    num = int(m.group(1)) if m else 0
    _acceptance_results[item.nodeid] = (num, label, rep.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok in sorted(_acceptance_results.values()):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num:2d}: {status} - {label}")
