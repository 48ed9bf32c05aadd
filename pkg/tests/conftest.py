import pytest

from primesums import build_sieve, builtin


@pytest.fixture(scope="session")
def sieve_1e5():
    return build_sieve(10**5)


@pytest.fixture(scope="session")
def sieve_1e6():
    return build_sieve(10**6)


@pytest.fixture(scope="session")
def identity():
    return builtin("identity")


@pytest.fixture(scope="session")
def f1():
    return builtin("f1")


@pytest.fixture(scope="session")
def square():
    return builtin("square")


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[key])
