"""Bounded enumeration of low-cost tree arrangements and the end-to-end solver.

Arrangements of a spanning tree are built by inserting vertices in reverse
leaf-elimination order.  Inserting ``x`` into a gap lengthens every placed
tree edge that crosses the gap by one and adds the edge from ``x`` to its
already placed neighbour.  Net cost only grows along a branch, so branches
over budget are cut without losing any arrangement.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Iterator

from .decomposition import dfs_tree_with_subtree_sizes
from .exceptions import Disconnected, InternalInvariantViolation, NotATree
from .graph import (
    Arrangement,
    Graph,
    connected_components,
    is_connected,
    is_simple_path,
    net_cost,
    path_order,
)
from .kernel import Gate, gc_paused, kernel_gate, lift_arrangement, suppress_all, suppressible_sequence

__all__ = [
    "SearchBudget",
    "SolveReport",
    "KernelStats",
    "spanning_tree",
    "leaf_elimination_order",
    "enumerate_arrangements",
    "enumerate_orders",
    "best_arrangement",
    "solve",
]


@dataclass
class SearchBudget:
    """Remaining net-cost allowance; consumers may lower ``k`` mid-search."""

    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 0:
            raise ValueError(f"budget must be a nonnegative integer, got {self.k!r}")
        self.k = int(self.k)


def _as_budget(k) -> SearchBudget:
    return k if isinstance(k, SearchBudget) else SearchBudget(k)


def spanning_tree(g: Graph) -> Graph:
    """DFS spanning tree from vertex 1, on the same vertex set."""
    if g.n == 0:
        return g
    if g.m == g.n - 1 and is_connected(g):
        return g
    tree = dfs_tree_with_subtree_sizes(g, 1)
    adj = [[] for _ in range(g.n + 1)]
    for v in tree.preorder:
        p = tree.parent[v]
        if p:
            adj[p].append(v)
            adj[v].append(p)
    return Graph(g.n, adj)


def leaf_elimination_order(t: Graph) -> tuple[int, ...]:
    """Repeatedly remove a current leaf; the last vertex closes the order.

    Among current leaves the one with the smallest original degree goes
    first, then the smallest id, so original leaves precede inner vertices.
    """
    n = t.n
    if n == 0:
        return ()
    if t.m != n - 1 or not is_connected(t):
        raise NotATree(f"graph with n={n}, m={t.m} is not a tree")
    if n == 1:
        return (1,)
    deg = [0] + [t.degree(v) for v in t.vertices]
    heap = [(1, v) for v in t.vertices if deg[v] == 1]
    heapq.heapify(heap)
    removed = bytearray(n + 1)
    order = []
    while len(order) < n - 1:
        _, x = heapq.heappop(heap)
        removed[x] = 1
        order.append(x)
        for y in t.neighbors(x):
            if not removed[y]:
                deg[y] -= 1
                if deg[y] == 1:
                    heapq.heappush(heap, (t.degree(y), y))
    order.append(next(v for v in t.vertices if not removed[v]))
    return tuple(order)


def enumerate_orders(t: Graph, budget, mirror_free: bool = False) -> Iterator[tuple[list, int]]:
    """Yield ``(left-to-right vertex list, tree net cost)`` for every
    arrangement of tree ``t`` whose net cost is at most ``budget.k``.

    ``budget.k`` is re-read at every branch, so a consumer may lower it while
    iterating.  With ``mirror_free`` only one of each arrangement and its
    reversal is produced.  Yielded lists must not be mutated.
    """
    budget = _as_budget(budget)
    seq = leaf_elimination_order(t)[::-1]
    n = len(seq)
    if n == 0:
        return
    if n == 1:
        yield [seq[0]], 0
        return
    placed_at = {seq[0]: 0}
    anchor = [0] * n
    for i in range(1, n):
        x = seq[i]
        anchor[i] = next(y for y in t.neighbors(x) if y in placed_at)
        placed_at[x] = i

    def extend(placed, spent, depth):
        x = seq[depth]
        idx = {v: i for i, v in enumerate(placed)}
        p = idx[anchor[depth]]
        # cover[g]: placed tree edges crossing gap g (new vertex lands at index g)
        cover = [0] * (depth + 2)
        for i in range(1, depth):
            a, b = idx[seq[i]], idx[anchor[i]]
            if a > b:
                a, b = b, a
            cover[a + 1] += 1
            cover[b + 1] -= 1
        for i in range(1, depth + 1):
            cover[i] += cover[i - 1]
        last = depth + 1 == n
        gaps = range(1, 2) if (mirror_free and depth == 1) else range(depth + 1)
        for gpos in gaps:
            s = spent + cover[gpos] + (p - gpos if gpos <= p else gpos - p - 1)
            if s > budget.k:
                continue
            child = placed[:gpos] + [x] + placed[gpos:]
            if last:
                yield child, s
            else:
                yield from extend(child, s, depth + 1)

    yield from extend([seq[0]], 0, 1)


def enumerate_arrangements(t: Graph, k, mirror_free: bool = False) -> Iterator[tuple[Arrangement, int]]:
    """Stream ``(Arrangement, net cost on t)`` for every arrangement of the
    tree ``t`` with net cost at most ``k``, each exactly once."""
    for order, c in enumerate_orders(t, k, mirror_free):
        yield Arrangement.from_order(order), c


def best_arrangement(g: Graph, k, mirror_free: bool = False, stats: dict | None = None):
    """Optimal arrangement of connected ``g`` if its net cost is at most ``k``.

    Arrangements of a spanning tree are enumerated with tree net cost at most
    ``k`` and scored on every edge of ``g``.  After each improvement the
    budget drops to one below the best score, which keeps the first optimum
    in enumeration order.  Returns ``(Arrangement, net cost)`` or ``None``.
    """
    budget = SearchBudget(_as_budget(k).k)
    if g.n == 0:
        return None
    if not is_connected(g):
        raise Disconnected("best_arrangement needs a connected graph")
    tree = spanning_tree(g)
    edges = g.edge_list()
    best = None
    best_cost = None
    seen = 0
    for order, _ in enumerate_orders(tree, budget, mirror_free):
        seen += 1
        pos = [0] * (g.n + 1)
        for i, v in enumerate(order):
            pos[v] = i
        c = 0
        for u, v in edges:
            d = pos[u] - pos[v]
            c += (d if d > 0 else -d) - 1
        if best_cost is None or c < best_cost:
            best_cost = c
            best = list(order)
            if c == 0:
                break
            if c - 1 < budget.k:
                budget.k = c - 1
    if stats is not None:
        stats["enumerated"] = stats.get("enumerated", 0) + seen
    if best is None or best_cost > _as_budget(k).k:
        return None
    return Arrangement.from_order(best), best_cost


@dataclass(frozen=True)
class KernelStats:
    """Sizes for one non-path component: before and after suppression."""

    n: int
    m: int
    suppressed: int
    kernel_n: int
    kernel_m: int
    gate: str

    def as_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "suppressed": self.suppressed,
            "kernel_n": self.kernel_n,
            "kernel_m": self.kernel_m,
            "gate": self.gate,
        }


@dataclass
class SolveReport:
    """Outcome of :func:`solve`.

    ``decision`` is true iff the optimal net cost is at most ``k``; then
    ``net_cost_opt`` and ``arrangement`` hold the optimum, otherwise both are
    ``None``.  ``timings`` are wall-clock milliseconds per phase.
    """

    k: int
    decision: bool
    net_cost_opt: int | None = None
    arrangement: Arrangement | None = None
    kernel_stats: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    enumerated: int = 0

    def to_json(self) -> dict:
        return {
            "decision": "yes" if self.decision else "no",
            "k": self.k,
            "ola_plus": self.net_cost_opt,
            "arrangement": list(self.arrangement.positions) if self.arrangement else None,
            "kernel_stats": [s.as_dict() for s in self.kernel_stats],
            "timings_ms": {key: round(v, 3) for key, v in self.timings.items()},
        }


def _solve_component(graph: Graph, budget: int, mirror_free: bool):
    """Kernelize, gate, search and lift one connected non-path graph.

    Returns ``(stats, result, timings, enumerated)`` where ``result`` is
    ``None`` or ``(Arrangement, net cost)``.
    """
    timings = {}
    t0 = time.perf_counter()
    plan = suppressible_sequence(graph, budget)
    kernel, record = suppress_all(graph, plan)
    gate = kernel_gate(kernel, budget)
    t1 = time.perf_counter()
    timings["kernelize"] = t1 - t0
    stats = KernelStats(graph.n, graph.m, len(plan), kernel.n, kernel.m, gate.value)
    if gate is Gate.REJECT_TOO_BIG:
        return stats, None, timings, 0
    counter = {}
    found = best_arrangement(kernel, budget, mirror_free, stats=counter)
    t2 = time.perf_counter()
    timings["search"] = t2 - t1
    if found is None:
        return stats, None, timings, counter.get("enumerated", 0)
    a_kernel, c = found
    lifted = lift_arrangement(record, a_kernel)
    timings["lift"] = time.perf_counter() - t2
    return stats, (lifted, c), timings, counter.get("enumerated", 0)


def solve(g: Graph, k, *, mirror_free: bool = False, n_jobs: int = 1,
          verify: bool = True) -> SolveReport:
    """Decide whether ``g`` has an arrangement of net cost at most ``k``.

    Path components cost nothing and are set aside.  With ``p`` remaining
    components each must cost at most ``k - p + 1``; every one is kernelized,
    gated, searched and lifted independently.  The global arrangement lays
    components out left to right by smallest vertex id.
    """
    k = _as_budget(k).k
    with gc_paused():
        return _solve(g, k, mirror_free, n_jobs, verify)


def _solve(g: Graph, k: int, mirror_free: bool, n_jobs: int, verify: bool) -> SolveReport:
    timings = {"components": 0.0, "kernelize": 0.0, "search": 0.0, "lift": 0.0}
    t0 = time.perf_counter()
    split = connected_components(g)
    hard = []
    is_path = []
    for part in split.parts:
        flag = is_simple_path(part.graph)
        is_path.append(flag)
        if not flag:
            hard.append(part)
    timings["components"] = time.perf_counter() - t0
    report = SolveReport(k=k, decision=False, timings=timings)
    p = len(hard)
    per_component = k - p + 1
    if p and per_component < 1:
        return _finish(report)

    if n_jobs != 1 and p > 1:
        from joblib import Parallel, delayed

        outcomes = Parallel(n_jobs=n_jobs)(
            delayed(_solve_component)(part.graph, per_component, mirror_free) for part in hard)
    else:
        outcomes = []
        for part in hard:
            out = _solve_component(part.graph, per_component, mirror_free)
            outcomes.append(out)
            if out[1] is None:
                break

    results = {}
    total = 0
    failed = False
    for part, (stats, result, comp_timings, enumerated) in zip(hard, outcomes):
        report.kernel_stats.append(stats)
        report.enumerated += enumerated
        for key, v in comp_timings.items():
            timings[key] += v
        if result is None:
            failed = True
            continue
        arrangement, c = result
        if verify and net_cost(part.graph, arrangement) != c:
            raise InternalInvariantViolation("lifted arrangement changed the net cost")
        results[id(part)] = arrangement
        total += c
    if failed or len(outcomes) < p or total > k:
        return _finish(report)

    t1 = time.perf_counter()
    order = []
    for part, flag in zip(split.parts, is_path):
        local = path_order(part.graph) if flag else results[id(part)].order()
        order.extend(part.to_parent[v - 1] for v in local)
    report.decision = True
    report.net_cost_opt = total
    report.arrangement = Arrangement.from_order(order) if order else Arrangement.identity(0)
    timings["lift"] += time.perf_counter() - t1
    return _finish(report)


def _finish(report: SolveReport) -> SolveReport:
    report.timings = {key: 1000.0 * v for key, v in report.timings.items()}
    return report
