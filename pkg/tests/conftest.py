import pytest

from coxiso.fixtures import load

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def fig1():
    return load("fig1")


@pytest.fixture(scope="session")
def fig3l():
    return load("fig3l")


@pytest.fixture(scope="session")
def fig3r():
    return load("fig3r")


@pytest.fixture(scope="session")
def fig2():
    return {k: load(f"fig2{k}") for k in ("ul", "ur", "ll", "lr")}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = None
    for key, value in report.user_properties:
        if key == "criterion":
            crit = value
    if crit is not None:
        ok = report.passed and _ACCEPTANCE.get(crit, True)
        _ACCEPTANCE[crit] = ok


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE, key=lambda c: int(c.split()[0])):
        terminalreporter.write_line(f"{'PASS' if _ACCEPTANCE[crit] else 'FAIL'}  AC{crit}")
