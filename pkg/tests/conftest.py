from fractions import Fraction

import pytest

from pisotlab import AlgebraicReal

LEHMER = "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"


@pytest.fixture(scope="session")
def golden():
    return AlgebraicReal("x^2-x-1", (1, 2))


@pytest.fixture(scope="session")
def three_halves():
    return AlgebraicReal.from_rational(Fraction(3, 2))


@pytest.fixture(scope="session")
def lehmer():
    return AlgebraicReal(LEHMER, (Fraction(11, 10), Fraction(13, 10)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
