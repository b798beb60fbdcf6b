import pytest
from hypothesis import settings

from idiom import corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CORPUS = corpus.within(14)
SMALL = corpus.within(8)


def lattice_params(entries):
    return [pytest.param(e.lattice, id=e.name) for e in entries]


@pytest.fixture
def exa1():
    return corpus.get("exa1")


@pytest.fixture
def ex2():
    return corpus.get("ex2")


@pytest.fixture
def diamond():
    return corpus.get("diamond")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
