"""Shared helpers: fixture access, seeded random graphs and relabelings."""

import itertools
import sys
import random

import pytest

from reebsphere.fixtures import fixture_graph, fixtures
from reebsphere.graph import Graph, relabel


def fx(name):
    return fixture_graph(name)


def fixture_params(tag=None):
    return [pytest.param(f.name, id=f.name) for f in fixtures(tag)]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    """An isomorphic copy with shuffled string labels."""
    names = [f"v{k}" for k in range(len(g))]
    rng.shuffle(names)
    return relabel(g, dict(zip(g.vertices, names)))


def random_graphs(seed: int, count: int, max_n: int = 9):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(random_graph(rng, n, rng.choice([0.3, 0.5, 0.7])))
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance lines (one per criterion) after the test run."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
