from __future__ import annotations

import random

import pytest

from colornet.graph import ColoredEdgeGraph, new_graph


def random_graph(rng: random.Random, n: int, m: int, p: float) -> ColoredEdgeGraph:
    edges = [
        (u, v, rng.randrange(m))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return new_graph(n, m, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def path2() -> ColoredEdgeGraph:
    return new_graph(3, 2, [(0, 1, 0), (1, 2, 1)])


ACCEPTANCE_RESULTS: list[tuple[str, bool, float, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs, budget in sorted(ACCEPTANCE_RESULTS, key=lambda r: int(r[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s, budget {budget})")
