import math
import os

import numpy as np
import pytest

from stripgaf import spectral as sp

DATA = os.path.join(os.path.dirname(__file__), "data")

# lines printed by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def gauss():
    return sp.gaussian()


@pytest.fixture(scope="session")
def unif():
    return sp.uniform()


@pytest.fixture(scope="session")
def two_atom():
    return sp.two_atom()


def data_path(name: str) -> str:
    return os.path.join(DATA, name)
