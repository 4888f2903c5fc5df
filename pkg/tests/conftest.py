import pytest

from combinatorics.eulerian import EulerianTable
from combinatorics.golden import EN_TEXT
from combinatorics.poly import parse


@pytest.fixture(scope="session")
def table():
    """One recurrence table for the whole run; E_n is filled in on demand."""
    return EulerianTable()


@pytest.fixture(scope="session")
def printed():
    """The printed E_n, n <= 7, as polynomials."""
    return {n: parse(EN_TEXT[n]) for n in range(8)}
