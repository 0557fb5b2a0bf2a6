import random

import pytest

from abeliantv.intlinalg import IntegerMatrix

ACCEPTANCE_RESULTS = {}


def random_symmetric(rng, m, bound=4):
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return IntegerMatrix.from_rows(rows, m)


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        status = "PASS" if ACCEPTANCE_RESULTS[name] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {name}")
