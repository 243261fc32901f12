import pytest

from harary_lab.graphs import enumerate_nonisomorphic

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def record_criterion(request):
    """Register the outcome of an acceptance criterion for the terminal summary."""

    def record(number: int, title: str):
        ACCEPTANCE[number] = (title, "pending")
        request.node._criterion = number

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item, "_criterion", None)
    if number is not None and rep.when == "call":
        title, _ = ACCEPTANCE[number]
        ACCEPTANCE[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


@pytest.fixture(scope="session")
def corpus6():
    return enumerate_nonisomorphic(6)


@pytest.fixture(scope="session")
def corpus5():
    return enumerate_nonisomorphic(5)
