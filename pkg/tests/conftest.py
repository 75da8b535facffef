import pytest

from trapsem import parse_program

P1_TEXT = "a :- b.\nb :- a.\n"
P2_TEXT = "a :- not b.\nb :- not a.\nc :- not c.\n"
P3_TEXT = "c :- not c.\n"


@pytest.fixture
def p1():
    return parse_program(P1_TEXT)


@pytest.fixture
def p2():
    return parse_program(P2_TEXT)


@pytest.fixture
def p3():
    return parse_program(P3_TEXT)


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acceptance.RESULTS):
        terminalreporter.write_line(line)
