import random

import pytest

from unisum import F17, GOLDILOCKS, Polynomial

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _criteria.get(n, (True, item.name))
        _criteria[n] = (prev[0] and rep.passed, item.name if not rep.passed else prev[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, name = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({name})")


@pytest.fixture
def f17():
    return F17


@pytest.fixture
def f64():
    return GOLDILOCKS


@pytest.fixture
def example_poly():
    # 11 + 10x + 8x^2 + 6x^3 over F17, values (1, 2, 3, 4) on <4>
    return Polynomial(F17, [11, 10, 8, 6])


@pytest.fixture
def rng():
    return random.Random(1234)
