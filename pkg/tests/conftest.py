from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from spherelike import corpus

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=40
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def kron():
    return corpus.kronecker()


@pytest.fixture(scope="session")
def a3():
    return corpus.bound_a3()


@pytest.fixture(scope="session")
def cyc():
    return corpus.nilpotent_cycle()


@pytest.fixture(scope="session")
def ss():
    return corpus.semisimple(2)


@pytest.fixture(scope="session")
def kron_objs(kron):
    return corpus.kronecker_corpus(kron)


@pytest.fixture(scope="session")
def a3_objs(a3):
    return corpus.a3_corpus(a3)
