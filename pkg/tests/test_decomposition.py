import itertools

import pytest
from hypothesis import given

from conftest import connected_graphs, is_two_connected, naive_bridges, perm_net_costs
from olaplus.decomposition import (
    bridgeless_components,
    dfs_tree_with_subtree_sizes,
    find_bridges,
    is_k_separating,
)
from olaplus.exceptions import Disconnected, NotABridge
from olaplus.generators import clique, path, star
from olaplus.graph import build_graph, is_connected
from olaplus.oracle import exact_ola_dp


def test_bridges_examples():
    assert len(find_bridges(clique(3))) == 0
    b = find_bridges(path(4))
    assert b.side_size == {(1, 2): (1, 3), (2, 3): (2, 2), (3, 4): (3, 1)}
    two_triangles = build_graph(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    b = find_bridges(two_triangles)
    assert b.bridges == {(3, 4)}
    assert b.side_size[(3, 4)] == (3, 3)
    assert (4, 3) in b


def test_bridges_need_connected_graph():
    with pytest.raises(Disconnected):
        find_bridges(build_graph(4, [(1, 2), (3, 4)]))


@given(connected_graphs(max_n=8))
def test_bridges_match_naive(g):
    b = find_bridges(g)
    assert set(b.bridges) == naive_bridges(g)
    for n1, n2 in b.side_size.values():
        assert n1 + n2 == g.n


def test_bridgeless_components_examples():
    assert bridgeless_components(path(4)) == [(1,), (2,), (3,), (4,)]
    pendant = build_graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    assert bridgeless_components(pendant) == [(1, 2, 3), (4,)]
    assert bridgeless_components(clique(4)) == [(1, 2, 3, 4)]


def test_k_separating_examples():
    p5 = path(5)
    assert is_k_separating(p5, (2, 3), 1)
    assert not is_k_separating(p5, (2, 3), 2)
    assert not is_k_separating(p5, (1, 2), 1)
    with pytest.raises(NotABridge):
        is_k_separating(clique(3), (1, 2), 0)


def test_subtree_sizes_examples():
    t = dfs_tree_with_subtree_sizes(path(3), 1)
    assert [t.t[v] for v in (1, 2, 3)] == [3, 2, 1]
    t = dfs_tree_with_subtree_sizes(star(4), 1)
    assert t.t[1] == 4 and [t.t[v] for v in (2, 3, 4)] == [1, 1, 1]
    for root in (1, 2, 3):
        t = dfs_tree_with_subtree_sizes(clique(3), root)
        assert t.t[root] == 3
        assert sorted(t.t[1:]) == [1, 2, 3]


@given(connected_graphs(max_n=8))
def test_subtree_size_recurrence(g):
    t = dfs_tree_with_subtree_sizes(g)
    assert t.t[t.root] == g.n
    for v in g.vertices:
        assert t.t[v] == 1 + sum(t.t[c] for c in t.children(v, g))
    assert sorted(t.postorder) == list(g.vertices)


def _connected_graphs_on(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        if len(edges) < n - 1:
            continue
        g = build_graph(n, edges)
        if is_connected(g):
            yield g


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_bridgeless_lower_bound(n):
    for g in _connected_graphs_on(n):
        if len(find_bridges(g)) == 0:
            assert 2 * exact_ola_dp(g).ola_plus >= n - 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_two_connected_every_arrangement(n):
    for g in _connected_graphs_on(n):
        if is_two_connected(g):
            assert min(c for _, c in perm_net_costs(g)) >= n - 2


@given(connected_graphs(min_n=4, max_n=8, max_extra=3))
def test_optimal_arrangements_keep_separated_sides_apart(g):
    k = exact_ola_dp(g).ola_plus
    b = find_bridges(g)
    separating = [e for e in b.bridges if is_k_separating(g, e, k, b)]
    if not separating:
        return
    optima = [order for order, c in perm_net_costs(g) if c == k] if g.n <= 7 else [
        exact_ola_dp(g).witness.order()]
    for u, v in separating:
        side = _side(g, u, (u, v))
        for order in optima:
            pos = [i for i, x in enumerate(order) if x in side]
            assert pos[-1] - pos[0] + 1 == len(pos)


def _side(g, start, cut):
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in g.neighbors(x):
            if w not in seen and tuple(sorted((x, w))) != cut:
                seen.add(w)
                stack.append(w)
    return seen
