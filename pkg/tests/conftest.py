import random

import pytest

from idealpowers import MonomialIdeal, coordinate_arrangement_ideal, minimalize

_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_results.append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid, outcome in sorted(_acceptance_results):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{name}: {outcome.upper()}")


@pytest.fixture
def triangle():
    """The three coordinate lines in 3-space: (x1x2, x2x3, x1x3)."""
    return coordinate_arrangement_ideal(3, 2)


def random_ideal(rng: random.Random, n_max=4, gens_max=4, deg_max=3) -> MonomialIdeal:
    n = rng.randint(1, n_max)
    k = rng.randint(1, gens_max)
    gens = []
    for _ in range(k):
        g = [0] * n
        for _ in range(rng.randint(1, deg_max)):
            g[rng.randrange(n)] += 1
        gens.append(tuple(g))
    return minimalize(n, gens)


def random_squarefree_ideal(rng: random.Random, n_max=5, gens_max=5) -> MonomialIdeal:
    n = rng.randint(2, n_max)
    k = rng.randint(1, gens_max)
    gens = []
    for _ in range(k):
        size = rng.randint(1, n)
        support = rng.sample(range(n), size)
        g = [0] * n
        for i in support:
            g[i] = 1
        gens.append(tuple(g))
    return minimalize(n, gens)
