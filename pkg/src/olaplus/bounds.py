"""Exact counts of low-cost arrangements checked against closed-form bounds.

Two counts are compared with exponential upper bounds:

* paths ``p_1..p_n``: arrangements with net cost at most ``k``, ``p_1`` at
  position ``j`` and ``p_n`` at position ``n``; bound
  ``2^(a n + b k - x j + 2)``, tightened by the factor ``1 - d2`` at ``j = 2``;
* trees: the largest number of arrangements of net cost at most ``k`` of any
  ``n``-vertex tree when ``i`` given vertices must sit at position 1 or ``n``;
  bound ``2^(a n + b k - c i + 4)``.

Counts come from the bounded enumerator in :mod:`olaplus.search`.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import BadParameters, NotATree
from .generators import all_labeled_trees, path
from .graph import Graph, is_connected
from .search import enumerate_orders

__all__ = [
    "BoundConstants",
    "CONSTANTS",
    "CountReport",
    "path_bound",
    "tree_bound",
    "count_path_arrangements",
    "count_tree_arrangements",
    "tree_profile",
    "canonical_tree",
    "tree_classes",
    "verify_bounds",
    "reports_to_csv",
    "SLACK",
]

SLACK = 1e-9


@dataclass(frozen=True)
class BoundConstants:
    a: float = 0.119
    b: float = 1.96
    x: float = 0.967095
    c: float = 1.4625
    d2: float = 0.497534
    pn_offset: float = 2
    tree_offset: float = 4


CONSTANTS = BoundConstants()


def path_bound(n: int, k: int, j: int, const: BoundConstants = CONSTANTS) -> float:
    if j == 2:
        return (1 - const.d2) * 2.0 ** (const.a * n + const.b * k - 2 * const.x + const.pn_offset)
    return 2.0 ** (const.a * n + const.b * k - const.x * j + const.pn_offset)


def tree_bound(n: int, k: int, i: int, const: BoundConstants = CONSTANTS) -> float:
    return 2.0 ** (const.a * n + const.b * k - const.c * i + const.tree_offset)


@dataclass(frozen=True)
class CountReport:
    """One sweep cell; ``index`` is ``j`` for paths and ``i`` for trees."""

    family: str
    n: int
    k: int
    index: int
    exact_count: int
    bound: float
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.exact_count <= self.bound + SLACK

    def as_row(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "j_or_i": self.index,
            "exact_count": self.exact_count,
            "bound": repr(self.bound),
            "holds": str(self.holds).lower(),
        }


@lru_cache(maxsize=64)
def _path_table(n: int, k: int) -> dict:
    """Counter keyed by ``(net cost, position of p_1)`` over arrangements of
    ``P_n`` with ``p_n`` last and net cost at most ``k``."""
    table = Counter()
    for order, c in enumerate_orders(path(n), k):
        if order[-1] == n:
            table[(c, order.index(1) + 1)] += 1
    return table


def _path_count(n: int, k: int, j: int) -> int:
    table = _path_table(n, k)
    return sum(v for (c, jj), v in table.items() if c <= k and jj == j)


def count_path_arrangements(n: int, k: int, j: int, const: BoundConstants = CONSTANTS) -> CountReport:
    """Exact count of path arrangements with ``p_1`` at ``j`` and ``p_n`` last.

    ``j = 0`` names no position and counts as zero.
    """
    if n < 2 or k < 0 or not 0 <= j <= n - 1:
        raise BadParameters(f"need n >= 2, k >= 0, 0 <= j <= n - 1; got n={n}, k={k}, j={j}")
    note = ""
    if j == 0:
        count, note = 0, "j=0 is vacuous"
    else:
        count = _path_count(n, k, j)
        if j > k + 1:
            note = "zero law"
    return CountReport("path", n, k, j, count, path_bound(n, k, j, const), note)


def _check_tree(t: Graph):
    if t.n == 0 or t.m != t.n - 1 or not is_connected(t):
        raise NotATree("expected a tree")


def count_tree_arrangements(t: Graph, k: int, X=()) -> int:
    """Arrangements of tree ``t`` with net cost at most ``k`` that put every
    vertex of ``X`` at position 1 or ``n``."""
    X = frozenset(X)
    if k < 0:
        raise BadParameters("k must be nonnegative")
    if len(X) > 3 or not X <= set(t.vertices):
        raise BadParameters("X must be a subset of the vertices with |X| <= 3")
    _check_tree(t)
    if len(X) >= 3:
        return 0
    count = 0
    for order, _ in enumerate_orders(t, k):
        if X <= {order[0], order[-1]}:
            count += 1
    return count


def tree_profile(t: Graph, kmax: int) -> dict:
    """``max`` over ``X`` with ``|X| = i`` of the constrained count, for every
    ``k <= kmax`` and ``i`` in 0..2, from a single enumeration."""
    _check_tree(t)
    by_cost = Counter()
    ends_single = Counter()
    ends_pair = Counter()
    for order, c in enumerate_orders(t, kmax):
        left, right = order[0], order[-1]
        by_cost[c] += 1
        ends_single[(c, left)] += 1
        if right != left:
            ends_single[(c, right)] += 1
            ends_pair[(c, min(left, right), max(left, right))] += 1
    profile = {}
    for k in range(kmax + 1):
        total = sum(v for c, v in by_cost.items() if c <= k)
        single = Counter()
        for (c, v), cnt in ends_single.items():
            if c <= k:
                single[v] += cnt
        pair = Counter()
        for (c, u, v), cnt in ends_pair.items():
            if c <= k:
                pair[(u, v)] += cnt
        profile[(k, 0)] = total
        profile[(k, 1)] = max(single.values(), default=0)
        profile[(k, 2)] = max(pair.values(), default=0)
    return profile


def canonical_tree(t: Graph) -> str:
    """Isomorphism-invariant string of a tree (AHU encoding from its centre)."""
    _check_tree(t)
    n = t.n
    if n == 1:
        return "()"
    deg = [0] + [t.degree(v) for v in t.vertices]
    layer = [v for v in t.vertices if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.neighbors(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer

    def encode(root, parent):
        # iterative post-order to keep the recursion shallow
        stack = [(root, parent, False)]
        codes = {}
        while stack:
            v, par, done = stack.pop()
            if done:
                kids = sorted(codes.pop(w) for w in t.neighbors(v) if w != par)
                codes[v] = "(" + "".join(kids) + ")"
            else:
                stack.append((v, par, True))
                for w in t.neighbors(v):
                    if w != par:
                        stack.append((w, v, False))
        return codes[root]

    if len(centres) == 1:
        return encode(centres[0], 0)
    a, b = centres
    return "|".join(sorted([encode(a, b), encode(b, a)]))


def tree_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of ``n``-vertex trees,
    found by decoding every Prüfer sequence."""
    reps = {}
    for t in all_labeled_trees(n):
        key = canonical_tree(t)
        if key not in reps:
            reps[key] = t
    return [reps[key] for key in sorted(reps)]


def verify_bounds(path_n=(2, 12), path_k=(0, 4), path_j_extra: int = 2,
                  tree_n=(2, 8), tree_k=(0, 3), tree_i=(0, 1, 2), trees=None,
                  const: BoundConstants = CONSTANTS) -> list[CountReport]:
    """Sweep both families and report every cell.

    Paths cover ``j`` in ``0..min(k + path_j_extra, n - 1)``.  Trees default
    to every isomorphism class for each ``n`` in ``tree_n`` (exhaustive over
    labelled trees); pass ``trees`` to check a custom corpus instead.
    """
    reports = []
    for n in range(path_n[0], path_n[1] + 1):
        for k in range(path_k[0], path_k[1] + 1):
            for j in range(0, min(k + path_j_extra, n - 1) + 1):
                reports.append(count_path_arrangements(n, k, j, const))
    if tree_n is None and trees is None:
        return reports
    kmax = tree_k[1]
    corpus = {}
    if trees is not None:
        for t in trees:
            corpus.setdefault(t.n, []).append(t)
    else:
        for n in range(max(2, tree_n[0]), tree_n[1] + 1):
            corpus[n] = tree_classes(n)
    for n in sorted(corpus):
        best = Counter()
        for t in corpus[n]:
            for key, value in tree_profile(t, kmax).items():
                if value > best[key]:
                    best[key] = value
        for k in range(tree_k[0], kmax + 1):
            for i in tree_i:
                reports.append(CountReport("tree", n, k, i, best[(k, i)], tree_bound(n, k, i, const)))
    return reports


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["family", "n", "k", "j_or_i", "exact_count", "bound", "holds"],
                            lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.as_row())
    return buf.getvalue()
