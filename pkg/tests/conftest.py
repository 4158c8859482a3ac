import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ffperm import make_field  # noqa: E402


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f16():
    return make_field(2, 4)


@pytest.fixture
def f64():
    return make_field(2, 6)


# -- acceptance summary: one PASS/FAIL line per criterion ----------------------------

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or not mark.args:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = dict(item.user_properties).get("detail", "")
        _CRITERIA[n] = ("PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, detail = _CRITERIA[n]
        terminalreporter.write_line(f"{status} criterion {n}: {detail}".rstrip(": "))
