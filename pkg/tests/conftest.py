from __future__ import annotations

import random
import sys

import pytest
from hypothesis import settings

from twodp.graph import Graph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def graph(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


def cube() -> Graph:
    """Q3: square 0-1-2-3, square 4-5-6-7, rungs i-(i+4)."""
    return graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)] + [(i, i + 4) for i in range(4)])


def twisted_cube() -> Graph:
    """Like Q3 but the inner square is 4-6-5-7, so 0-4-6-2 and 1-5-7-3 cross."""
    return graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 6), (6, 5), (5, 7), (7, 4)] + [(i, i + 4) for i in range(4)])


def diamond() -> Graph:
    return graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def wheel5() -> Graph:
    return graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])


def pendant5() -> Graph:
    """4-cycle 0-1-2-3 plus vertex 4 joined to 0 and 2."""
    return graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])


def random_connected(rng: random.Random, n: int, m: int | None = None) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    target = rng.randint(n - 1, len(pairs)) if m is None else m
    rng.shuffle(pairs)
    for e in pairs:
        if len(edges) >= target:
            break
        edges.add(e)
    perm = list(range(n))
    rng.shuffle(perm)
    return graph(n, [(perm[u], perm[v]) for u, v in edges])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.SUMMARY:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.SUMMARY):
        terminalreporter.write_line(mod.SUMMARY[number])
