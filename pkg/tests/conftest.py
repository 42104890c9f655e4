import random

import pytest
from hypothesis import strategies as st

from scclevel import DirectedGraph

ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line for an acceptance criterion, then assert it."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, m: int) -> DirectedGraph:
    return DirectedGraph.from_edges(n, ((rng.randrange(n), rng.randrange(n)) for _ in range(m)))


@st.composite
def graphs(draw, max_vertices=12, max_edges=40):
    n = draw(st.integers(0, max_vertices))
    if n == 0:
        return DirectedGraph(0)
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return DirectedGraph.from_edges(n, edges)


class NaiveDisjointSet:
    """Plain parent forest: no compression, no ranks."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def blocks_of(find, n):
    """Canonical partition (sorted member tuples) induced by a find function."""
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(g) for g in groups.values())


def assert_min_levels_match_stack(ds, stack):
    """Each root's min level equals the shallowest stacked member of its set."""
    shallowest = {}
    for frame in stack:
        r = ds.find(frame.vertex)
        shallowest[r] = min(shallowest.get(r, ds.sentinel_level), frame.level)
    for r in ds.roots():
        assert ds.min_level[r] == shallowest.get(r, ds.sentinel_level), (r, shallowest)
