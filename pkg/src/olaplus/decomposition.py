"""Bridges, bridgeless components and DFS subtree sizes.

Everything here runs off one iterative lowpoint DFS (Tarjan) and is linear
in ``n + m``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import Disconnected, NotABridge
from .graph import Graph

__all__ = [
    "BridgeSet",
    "RootedDfsTree",
    "find_bridges",
    "bridgeless_components",
    "is_k_separating",
    "dfs_tree_with_subtree_sizes",
]


@dataclass(frozen=True)
class RootedDfsTree:
    """DFS spanning tree with subtree sizes.

    ``parent``, ``t``, ``pre`` and ``low`` are lists indexed by vertex (slot 0
    unused, ``parent[root] == 0``).  ``t[v]`` is the number of vertices in the
    subtree rooted at ``v``; ``preorder``/``postorder`` list the vertices in
    DFS discovery/finishing order with children taken in ascending id.
    """

    root: int
    parent: list
    t: list
    pre: list
    low: list
    preorder: list
    postorder: list
    work: int = 0

    @property
    def n(self) -> int:
        return len(self.preorder)

    def children(self, v: int, g: Graph) -> list[int]:
        par = self.parent
        return [w for w in g.neighbors(v) if par[w] == v]

    def is_tree_bridge(self, child: int) -> bool:
        """Whether the tree edge from ``child`` to its parent is a bridge."""
        return self.low[child] == self.pre[child]


def _lowpoint_dfs(g: Graph, root: int) -> RootedDfsTree:
    n = g.n
    adj = g._adj
    pre = [0] * (n + 1)
    low = [0] * (n + 1)
    parent = [0] * (n + 1)
    preorder = [root]
    postorder = []
    pre[root] = low[root] = 1
    counter = 1
    work = 1
    stack = [root]
    iters = [iter(adj[root])]
    while iters:
        v = stack[-1]
        pv = parent[v]
        for w in iters[-1]:
            work += 1
            if not pre[w]:
                parent[w] = v
                counter += 1
                pre[w] = low[w] = counter
                preorder.append(w)
                stack.append(w)
                iters.append(iter(adj[w]))
                break
            if w != pv and pre[w] < low[v]:
                low[v] = pre[w]
        else:
            iters.pop()
            stack.pop()
            postorder.append(v)
            if pv and low[v] < low[pv]:
                low[pv] = low[v]
    if counter != n:
        raise Disconnected(f"graph has {n} vertices but only {counter} are reachable from {root}")
    t = [1] * (n + 1)
    t[0] = 0
    for v in postorder:
        p = parent[v]
        if p:
            t[p] += t[v]
    work += n
    return RootedDfsTree(root, parent, t, pre, low, preorder, postorder, work)


def dfs_tree_with_subtree_sizes(g: Graph, root: int | None = None) -> RootedDfsTree:
    """DFS tree of a connected graph rooted at ``root`` (default: vertex 1)."""
    if g.n == 0:
        raise Disconnected("empty graph has no DFS tree")
    if root is None:
        root = 1
    if not 1 <= root <= g.n:
        raise ValueError(f"root {root} is not a vertex")
    return _lowpoint_dfs(g, root)


@dataclass(frozen=True)
class BridgeSet:
    """Bridges of a connected graph.

    ``side_size[(u, v)]`` is ``(n1, n2)`` where ``n1`` counts the side of
    ``G - uv`` containing ``u`` (the smaller endpoint).
    """

    bridges: frozenset
    side_size: dict

    def __contains__(self, e):
        u, v = e
        return ((u, v) if u < v else (v, u)) in self.bridges

    def __len__(self):
        return len(self.bridges)


def find_bridges(g: Graph, tree: RootedDfsTree | None = None) -> BridgeSet:
    if g.n == 0:
        return BridgeSet(frozenset(), {})
    if tree is None:
        tree = _lowpoint_dfs(g, 1)
    n = g.n
    side = {}
    for v in tree.preorder:
        p = tree.parent[v]
        if p and tree.low[v] == tree.pre[v]:
            tv = tree.t[v]
            if v < p:
                side[(v, p)] = (tv, n - tv)
            else:
                side[(p, v)] = (n - tv, tv)
    return BridgeSet(frozenset(side), side)


def bridgeless_components(g: Graph, bridges: BridgeSet | None = None) -> list[tuple[int, ...]]:
    """Vertex sets of the components of ``g`` minus its bridges.

    Parts are sorted internally and listed by smallest vertex.
    """
    if bridges is None:
        bridges = find_bridges(g)
    cut = bridges.bridges
    label = [0] * (g.n + 1)
    parts = []
    for s in g.vertices:
        if label[s]:
            continue
        label[s] = 1
        part = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if label[w]:
                    continue
                if ((u, w) if u < w else (w, u)) in cut:
                    continue
                label[w] = 1
                part.append(w)
                stack.append(w)
        parts.append(tuple(sorted(part)))
    return parts


def is_k_separating(g: Graph, e, k: int, bridges: BridgeSet | None = None) -> bool:
    """True iff removing bridge ``e`` leaves two sides with more than ``k`` vertices."""
    if bridges is None:
        bridges = find_bridges(g)
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in bridges.bridges:
        raise NotABridge(f"{tuple(e)!r} is not a bridge")
    n1, n2 = bridges.side_size[key]
    return n1 > k and n2 > k
