"""Shared strategies and brute-force helpers.

The helpers here deliberately avoid the package's algorithms: they score
permutations directly and find bridges by deleting edges one at a time.
"""

from __future__ import annotations

import itertools
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from olaplus.generators import prufer_to_edges
from olaplus.graph import Graph, build_graph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def perm_net_costs(g: Graph):
    """Yield ``(order, net cost)`` for every permutation of ``g``'s vertices."""
    edges = g.edge_list()
    for order in itertools.permutations(g.vertices):
        pos = {v: i for i, v in enumerate(order)}
        yield order, sum(abs(pos[u] - pos[v]) - 1 for u, v in edges)


def brute_ola_plus(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(c for _, c in perm_net_costs(g))


def n_components(n: int, edges) -> int:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            count -= 1
    return count


def naive_bridges(g: Graph) -> set:
    edges = g.edge_list()
    base = n_components(g.n, edges)
    return {e for e in edges if n_components(g.n, [f for f in edges if f != e]) > base}


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or n_components(g.n, g.edge_list()) != 1:
        return False
    for x in g.vertices:
        rest = [(u if u < x else u - 1, v if v < x else v - 1)
                for u, v in g.edge_list() if x not in (u, v)]
        if n_components(g.n - 1, rest) != 1:
            return False
    return True


def random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    seq = [rng.randint(1, n) for _ in range(max(0, n - 2))]
    edges = set(prufer_to_edges(seq, n)) if n > 1 else set()
    pool = [e for e in itertools.combinations(range(1, n + 1), 2) if e not in edges]
    edges |= set(rng.sample(pool, min(extra, len(pool))))
    return build_graph(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8, max_extra=6):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(1, n), min_size=max(0, n - 2), max_size=max(0, n - 2)))
    edges = set(prufer_to_edges(seq, n)) if n > 1 else set()
    pool = [e for e in itertools.combinations(range(1, n + 1), 2) if e not in edges]
    if pool:
        chosen = draw(st.lists(st.sampled_from(pool), max_size=max_extra, unique=True))
        edges |= set(chosen)
    return build_graph(n, sorted(edges))


@st.composite
def trees(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(1, n), min_size=max(0, n - 2), max_size=max(0, n - 2)))
    return build_graph(n, prufer_to_edges(seq, n))


@st.composite
def any_graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pool = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    return build_graph(n, edges)


@st.composite
def graph_and_arrangement(draw, max_n=8):
    g = draw(any_graphs(max_n=max_n))
    order = draw(st.permutations(list(g.vertices)))
    return g, order


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
