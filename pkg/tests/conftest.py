import itertools
import random
from fractions import Fraction

import pytest

from posbergman.om import OrientedMatroid, SignedSet, from_digraph

# one representative per +/- pair, as written in the worked K4 example
EX_CIRCUITS = [
    (1, -2, 4),
    (1, -3, 5),
    (2, -3, 6),
    (4, -5, 6),
    (1, -2, 5, -6),
    (1, -3, 4, 6),
    (2, -3, -4, 5),
]
EX_OMEGA = (1, 1, 1, 1, 1, 0)
EX_MW = [(1, -2, 4), (1, -3, 5), (2, -3), (4, -5), (1, -2, 5), (1, -3, 4)]


@pytest.fixture
def ex_matroid():
    return OrientedMatroid.from_signs(6, EX_CIRCUITS)


def ss(n, *signed):
    return SignedSet.from_signs(n, signed)


def random_digraph(rng, n_vertices, p=0.7):
    """Random simple digraph on 1..n_vertices (at least one arc)."""
    arcs = []
    for i, j in itertools.combinations(range(1, n_vertices + 1), 2):
        if rng.random() < p:
            arcs.append((i, j) if rng.random() < 0.5 else (j, i))
    if not arcs:
        arcs = [(1, 2)]
    return arcs


def random_graphic(rng, max_vertices=5):
    return from_digraph(random_digraph(rng, rng.randint(3, max_vertices)))


def random_rational_weight(rng, m, spread=3):
    return tuple(Fraction(rng.randint(-spread, spread), rng.randint(1, 2)) for _ in range(m))


@pytest.fixture
def rng():
    return random.Random(20261017)


# ---------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    def record(number, text):
        ACCEPTANCE[number] = [text, None]
        request.node._criterion = number

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item, "_criterion", None)
    if number is not None and rep.when == "call":
        ACCEPTANCE[number][1] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        text, ok = ACCEPTANCE[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {text}")
