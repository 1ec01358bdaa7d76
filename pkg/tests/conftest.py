import random

import pytest
from hypothesis import strategies as st

from stlab.graph import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_order=0, max_order=10):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, b in zip(pairs, bits) if b])


@pytest.fixture
def rng():
    return random.Random(20241016)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
