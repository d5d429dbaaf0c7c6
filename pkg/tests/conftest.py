import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from msalg import io  # noqa: E402


@pytest.fixture(scope="session")
def m1():
    return io.load_algebra("m1.alg")


@pytest.fixture(scope="session")
def m2():
    return io.load_algebra("m2.alg")


@pytest.fixture(scope="session")
def l1():
    return io.load_algebra("l1.alg")


@pytest.fixture(scope="session")
def l2():
    return io.load_algebra("l2.alg")


@pytest.fixture(scope="session")
def s3():
    return io.load_algebra("s.alg")


@pytest.fixture(scope="session")
def t1():
    return io.load_triple("l1_triple.trp")


@pytest.fixture(scope="session")
def t2():
    return io.load_triple("l2_triple.trp")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
