"""Simple undirected graphs, linear arrangements and their costs.

Vertices are the dense integers ``1..n``.  Positions of an arrangement are
``1..n`` as well, so an arrangement is stored as a position list indexed by
vertex.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import (
    ArrangementMismatch,
    DuplicateEdge,
    EndpointOutOfRange,
    LoopEdge,
)

__all__ = [
    "Graph",
    "Arrangement",
    "Component",
    "ComponentSplit",
    "build_graph",
    "net_cost",
    "cost",
    "connected_components",
    "is_connected",
    "is_simple_path",
    "path_order",
]


class Graph:
    """Immutable simple undirected graph on the vertex set ``1..n``.

    Adjacency lists are sorted ascending, which fixes the iteration order of
    every traversal in the package.  Use :func:`build_graph` to construct a
    graph from untrusted input.
    """

    __slots__ = ("n", "_adj", "_m", "_edges")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        # adjacency[0] is a placeholder so that adjacency[v] works for v in 1..n
        self.n = n
        self._adj = tuple(tuple(sorted(nb)) for nb in adjacency)
        if len(self._adj) != n + 1:
            raise ValueError("adjacency must have n + 1 entries")
        self._m = sum(len(nb) for nb in self._adj) // 2
        self._edges = None

    @classmethod
    def _trusted(cls, n, adjacency):
        # adjacency already sorted tuples with placeholder; skips the copy
        g = cls.__new__(cls)
        g.n = n
        g._adj = adjacency
        g._m = sum(len(nb) for nb in adjacency) // 2
        g._edges = None
        return g

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> frozenset:
        """Edge set as ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = frozenset(self.iter_edges())
        return self._edges

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        adj = self._adj
        for u in range(1, self.n + 1):
            for v in adj[u]:
                if u < v:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.iter_edges())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        if self._edges is not None:
            return (u, v) in self._edges
        nb = self._adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]], *, lines=None) -> Graph:
    """Validate ``edge_list`` and build a :class:`Graph` on ``1..n``.

    Loops, repeated unordered pairs and endpoints outside ``1..n`` raise
    :class:`LoopEdge`, :class:`DuplicateEdge` and :class:`EndpointOutOfRange`.
    ``lines`` optionally gives the source line of each edge for error messages.
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
    n = int(n)
    adj = [[] for _ in range(n + 1)]
    seen = set()
    for i, pair in enumerate(edge_list):
        line = lines[i] if lines is not None else None
        try:
            u, v = pair
            u = _as_vertex(u)
            v = _as_vertex(v)
        except (TypeError, ValueError):
            raise EndpointOutOfRange(tuple(pair), i, line, "endpoints must be integers") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise EndpointOutOfRange((u, v), i, line, f"vertices are 1..{n}")
        if u == v:
            raise LoopEdge((u, v), i, line)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge((u, v), i, line)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    g = Graph._trusted(n, tuple(tuple(sorted(nb)) for nb in adj))
    g._edges = frozenset(seen)
    return g


def _as_vertex(x) -> int:
    if isinstance(x, bool):
        raise TypeError
    if isinstance(x, int):
        return x
    y = int(x)
    if y != x:
        raise ValueError
    return y


class Arrangement:
    """A bijection from the vertices ``1..n`` onto the positions ``1..n``."""

    __slots__ = ("_pos",)

    def __init__(self, positions: Sequence[int]):
        pos = tuple(int(p) for p in positions)
        n = len(pos)
        if sorted(pos) != list(range(1, n + 1)):
            raise ArrangementMismatch(
                f"positions {list(pos)!r} are not a permutation of 1..{n}")
        self._pos = pos

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Arrangement":
        """Build the arrangement that places ``order[0]`` first, ``order[1]`` second..."""
        n = len(order)
        pos = [0] * n
        for p, v in enumerate(order, 1):
            if not 1 <= v <= n or pos[v - 1]:
                raise ArrangementMismatch(f"order {list(order)!r} is not a permutation of 1..{n}")
            pos[v - 1] = p
        a = cls.__new__(cls)
        a._pos = tuple(pos)
        return a

    @classmethod
    def identity(cls, n: int) -> "Arrangement":
        a = cls.__new__(cls)
        a._pos = tuple(range(1, n + 1))
        return a

    @property
    def n(self) -> int:
        return len(self._pos)

    @property
    def positions(self) -> tuple[int, ...]:
        """Position list indexed by ``vertex - 1``."""
        return self._pos

    def position(self, v: int) -> int:
        return self._pos[v - 1]

    def order(self) -> tuple[int, ...]:
        out = [0] * len(self._pos)
        for v, p in enumerate(self._pos, 1):
            out[p - 1] = v
        return tuple(out)

    def reverse(self) -> "Arrangement":
        n1 = len(self._pos) + 1
        a = Arrangement.__new__(Arrangement)
        a._pos = tuple(n1 - p for p in self._pos)
        return a

    def __len__(self):
        return len(self._pos)

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self._pos == other._pos

    def __hash__(self):
        return hash(self._pos)

    def __repr__(self):
        return f"Arrangement({list(self._pos)!r})"


def _check_arrangement(g: Graph, a: Arrangement):
    if not isinstance(a, Arrangement):
        a = Arrangement(a)
    if a.n != g.n:
        raise ArrangementMismatch(f"arrangement covers {a.n} vertices, graph has {g.n}")
    return a


def net_cost(g: Graph, a: Arrangement) -> int:
    """Sum over edges of ``|pos(u) - pos(v)| - 1``."""
    a = _check_arrangement(g, a)
    pos = (0,) + a.positions
    adj = g._adj
    total = 0
    for u in range(1, g.n + 1):
        pu = pos[u]
        for v in adj[u]:
            if u < v:
                d = pos[v] - pu
                total += (d if d > 0 else -d) - 1
    return total


def cost(g: Graph, a: Arrangement) -> int:
    return net_cost(g, a) + g.m


@dataclass(frozen=True)
class Component:
    """A connected part of a parent graph, relabelled to ``1..len``.

    ``to_parent[i - 1]`` is the parent id of local vertex ``i``; local ids
    follow ascending parent ids.
    """

    graph: Graph
    to_parent: tuple[int, ...]

    def from_parent(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.to_parent, 1)}


@dataclass(frozen=True)
class ComponentSplit:
    """Connected components ordered by their smallest parent vertex."""

    parts: tuple[Component, ...]
    n: int

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _component_labels(g: Graph) -> tuple[list[int], int]:
    label = [0] * (g.n + 1)
    adj = g._adj
    c = 0
    for s in range(1, g.n + 1):
        if label[s]:
            continue
        c += 1
        label[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not label[w]:
                    label[w] = c
                    stack.append(w)
    return label, c


def connected_components(g: Graph) -> ComponentSplit:
    label, count = _component_labels(g)
    if count == 1:
        return ComponentSplit((Component(g, tuple(range(1, g.n + 1))),), g.n)
    members = [[] for _ in range(count + 1)]
    for v in range(1, g.n + 1):
        members[label[v]].append(v)
    local = [0] * (g.n + 1)
    parts = []
    adj = g._adj
    for c in range(1, count + 1):
        vs = members[c]
        for i, v in enumerate(vs, 1):
            local[v] = i
        sub = [()] + [tuple(local[w] for w in adj[v]) for v in vs]
        parts.append(Component(Graph._trusted(len(vs), tuple(sub)), tuple(vs)))
    return ComponentSplit(tuple(parts), g.n)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _component_labels(g)[1] == 1


def is_simple_path(g: Graph) -> bool:
    """True iff ``g`` is a path graph (a single vertex counts)."""
    if g.n == 0 or g.m != g.n - 1 or g.max_degree() > 2:
        return False
    return is_connected(g)


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph from its lower-numbered end to the other."""
    if g.n == 1:
        return [1]
    start = min(v for v in g.vertices if g.degree(v) == 1)
    order = [start]
    prev, cur = 0, start
    while True:
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order
