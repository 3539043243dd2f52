import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semimatroids import corpus  # noqa: E402
from semimatroids.arrangement import Arrangement  # noqa: E402
from semimatroids.graph import MultiGraph  # noqa: E402

CORPUS_SEED = 20240601


@pytest.fixture(scope="session")
def semimatroids_corpus():
    return corpus.semimatroid_corpus(CORPUS_SEED, 220)


@pytest.fixture(scope="session")
def arrangement_corpus():
    rng = random.Random(CORPUS_SEED + 1)
    return [corpus.random_arrangement(rng) for _ in range(110)]


@pytest.fixture(scope="session")
def central_corpus():
    rng = random.Random(CORPUS_SEED + 2)
    return [corpus.random_arrangement(rng, central=True) for _ in range(24)]


@pytest.fixture(scope="session")
def graph_corpus():
    rng = random.Random(CORPUS_SEED + 3)
    fixed = [
        (MultiGraph(3, [(1, 2), (2, 3), (1, 3)]), [(1, 2), (2, 3), (1, 3)], [1, 0, 0]),
        (MultiGraph(2, [(1, 2)] * 3), [(1, 2)] * 3, [1, 1, 0]),
        (MultiGraph(1, [(1, 1)]), [(1, 1)], [0]),
        (MultiGraph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]), None, [1, -1, 0, 2, 1]),
    ]
    return fixed + [corpus.random_graph(rng) for _ in range(40)]


@pytest.fixture(scope="session")
def pointed_corpus():
    rng = random.Random(CORPUS_SEED + 4)
    return [corpus.random_pointed(rng) for _ in range(60)]


def braid3():
    return Arrangement(3, [([-1, 1, 0], 0), ([0, -1, 1], 0), ([-1, 0, 1], 0)])


# acceptance summary: one line per criterion

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_")[1]
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(name, "PASS")
        _criteria[name] = "PASS" if report.passed and prev == "PASS" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {_criteria[name]}  {label.replace('_', ' ')}")
