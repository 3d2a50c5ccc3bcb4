import pytest

from rsweight import build_domain, build_field


@pytest.fixture(scope="session")
def gf3():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def gf81():
    return build_field(3, 4)


@pytest.fixture(scope="session")
def full3(gf3):
    return build_domain(gf3, "full")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number].line())
