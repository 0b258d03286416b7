import random

import pytest
from hypothesis import settings

from chevalley.constants import f4_symbolic_table, random_assignment
from chevalley.roots import build_f4
from chevalley.signs import all_plus

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

# Lines recorded by test_acceptance.py, echoed after the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def rs():
    return build_f4()


@pytest.fixture(scope="session")
def table():
    return f4_symbolic_table()


@pytest.fixture(scope="session")
def plus(table):
    return table.specialize(all_plus())


@pytest.fixture(scope="session")
def random_tables(table):
    rng = random.Random(2024)
    return [table.specialize(random_assignment(table.symbols, rng)) for _ in range(5)]
