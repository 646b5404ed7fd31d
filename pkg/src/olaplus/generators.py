"""Deterministic instance families for tests, benchmarks and the CLI."""

from __future__ import annotations

import itertools
import random

from .exceptions import BadParameters, UnknownFamily
from .graph import Graph, build_graph

__all__ = [
    "FAMILIES",
    "generate_instance",
    "path",
    "cycle",
    "clique",
    "star",
    "caterpillar",
    "random_tree",
    "tree_plus_chords",
    "two_cliques_bridged",
    "prufer_to_edges",
    "all_labeled_trees",
]


def _need(n, name="n", low=1):
    if isinstance(n, bool) or not isinstance(n, int) or n < low:
        raise BadParameters(f"{name} must be an integer >= {low}, got {n!r}")
    return n


def path(n: int) -> Graph:
    _need(n)
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _need(n, low=3)
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def clique(n: int) -> Graph:
    _need(n)
    return build_graph(n, list(itertools.combinations(range(1, n + 1), 2)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 1."""
    _need(n)
    return build_graph(n, [(1, i) for i in range(2, n + 1)])


def caterpillar(spine: int, legs: int = 1, stride: int = 1, triangle: int = 0) -> Graph:
    """Path of ``spine`` vertices with ``legs`` pendant vertices on every
    ``stride``-th spine vertex (starting at the first).

    ``triangle=1`` adds one more vertex adjacent to the two middle spine
    vertices.
    """
    _need(spine)
    _need(legs, "legs", 0)
    _need(stride, "stride")
    if triangle not in (0, 1):
        raise BadParameters("triangle must be 0 or 1")
    if triangle and spine < 2:
        raise BadParameters("a triangle needs at least two spine vertices")
    edges = [(i, i + 1) for i in range(1, spine)]
    nxt = spine + 1
    for s in range(1, spine + 1, stride):
        for _ in range(legs):
            edges.append((s, nxt))
            nxt += 1
    if triangle:
        mid = max(1, spine // 2)
        edges.append((mid, nxt))
        edges.append((mid + 1, nxt))
        nxt += 1
    return build_graph(nxt - 1, edges)


def prufer_to_edges(seq, n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence over ``1..n`` (length ``n - 2``) into tree edges."""
    if n == 1:
        return []
    if n == 2:
        return [(1, 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n) if leaf < n else (n, leaf))
    return edges


def all_labeled_trees(n: int):
    """Every labelled tree on ``1..n`` (``n^(n-2)`` of them)."""
    _need(n)
    if n <= 2:
        yield build_graph(n, prufer_to_edges((), n))
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield build_graph(n, prufer_to_edges(seq, n))


def random_tree(n: int, seed=None) -> Graph:
    _need(n)
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(max(0, n - 2))]
    return build_graph(n, prufer_to_edges(seq, n))


def tree_plus_chords(n: int, c: int = 1, seed=None) -> Graph:
    """Random tree on ``n`` vertices plus ``c`` random non-tree edges."""
    _need(n)
    _need(c, "c", 0)
    if c > n * (n - 1) // 2 - (n - 1):
        raise BadParameters(f"K_{n} has room for fewer than {c} chords")
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(max(0, n - 2))]
    edges = prufer_to_edges(seq, n)
    present = set(edges)
    chords = []
    if c:
        candidates = [e for e in itertools.combinations(range(1, n + 1), 2) if e not in present]
        chords = rng.sample(candidates, c)
    return build_graph(n, edges + sorted(chords))


def two_cliques_bridged(n: int) -> Graph:
    """Two disjoint copies of ``K_n`` joined by the single edge ``(n, n + 1)``."""
    _need(n)
    left = list(itertools.combinations(range(1, n + 1), 2))
    right = [(u + n, v + n) for u, v in left]
    return build_graph(2 * n, left + right + [(n, n + 1)])


FAMILIES = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "clique": (clique, ("n",)),
    "star": (star, ("n",)),
    "caterpillar": (caterpillar, ("spine", "legs", "stride", "triangle")),
    "random_tree": (random_tree, ("n",)),
    "tree_plus_chords": (tree_plus_chords, ("n", "c")),
    "two_cliques_bridged": (two_cliques_bridged, ("n",)),
}
_SEEDED = {"random_tree", "tree_plus_chords"}


def generate_instance(family: str, params: dict | None = None, seed=None) -> Graph:
    """Build an instance of a named family; identical inputs give identical graphs."""
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    fn, allowed = FAMILIES[family]
    params = dict(params or {})
    extra = set(params) - set(allowed)
    if extra:
        raise BadParameters(f"{family} does not take {sorted(extra)}; allowed: {list(allowed)}")
    try:
        if family in _SEEDED:
            return fn(**params, seed=seed)
        return fn(**params)
    except TypeError as exc:
        raise BadParameters(f"{family}: {exc}") from None
