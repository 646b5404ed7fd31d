"""Linear-time kernelization by suppressing degree-2 vertices.

A degree-2 vertex is *k-suppressible* when both incident edges are bridges
whose removal leaves more than ``k`` vertices on each side.  Suppressing it
(deleting it and joining its two neighbours) does not change the optimal net
cost once ``k`` is at least that cost.  One bottom-up pass over a DFS tree
picks a set of vertices that can be suppressed one after another; afterwards
a connected graph whose optimal net cost is at most ``k`` has at most
``5k + 2`` vertices and ``6k + 1`` edges.
"""

from __future__ import annotations

import enum
import gc
from contextlib import contextmanager
from dataclasses import dataclass

from .decomposition import RootedDfsTree, dfs_tree_with_subtree_sizes
from .exceptions import InternalInvariantViolation, RecordMismatch
from .graph import Arrangement, Graph

__all__ = [
    "SuppressionPlan",
    "KernelRecord",
    "Gate",
    "suppressible_sequence",
    "suppress_all",
    "kernel_gate",
    "lift_arrangement",
    "kernelize",
    "max_kernel_vertices",
    "max_kernel_edges",
    "gc_paused",
]


@contextmanager
def gc_paused():
    """Hold the cyclic garbage collector off for a block.

    The linear passes allocate millions of small acyclic objects; left on,
    the collector rescans the growing heap and the passes turn superlinear.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


@dataclass(frozen=True)
class SuppressionPlan:
    """Vertices to suppress, in the order the bottom-up pass accepted them.

    ``tprime[v]`` is the number of accepted vertices inside the DFS subtree
    of ``v`` once ``v`` has been visited.  ``work`` counts elementary steps of
    the DFS and of the pass and exists for complexity checks.
    """

    k: int
    root: int
    order: tuple[int, ...]
    tprime: list
    work: int

    def __len__(self):
        return len(self.order)


def suppressible_sequence(g: Graph, k: int, root: int | None = None,
                          tree: RootedDfsTree | None = None) -> SuppressionPlan:
    """Compute the suppression set S' of a connected graph in one pass.

    Vertices are visited in DFS post-order (children by ascending id).  With
    ``t`` the subtree sizes and ``t'`` the running count of accepted vertices
    per subtree, a degree-2 cut vertex ``v`` is accepted when

    * ``v`` is the root with children ``u, w``: ``t_u - t'_u > k`` and
      ``t_w - t'_w > k``;
    * otherwise, with ``u`` its only child:
      ``k + 1 < t_v - t'_u < n - k - |S'|``, ``|S'|`` taken before ``v``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if tree is None:
        tree = dfs_tree_with_subtree_sizes(g, root)
    n = g.n
    adj = g._adj
    parent, t, pre, low = tree.parent, tree.t, tree.pre, tree.low
    root = tree.root
    tp = [0] * (n + 1)
    acc = [0] * (n + 1)
    accepted = []
    work = tree.work
    upper = n - k
    for v in tree.postorder:
        work += 1
        nb = adj[v]
        value = acc[v]
        if len(nb) == 2:
            a, b = nb
            if v == root:
                if parent[a] == v and parent[b] == v:
                    # both children hang off the root, so both edges are bridges
                    if t[a] - tp[a] > k and t[b] - tp[b] > k:
                        accepted.append(v)
                        value += 1
            else:
                u = b if parent[v] == a else a
                # u must be the tree child and vu a bridge; a back edge means no cut
                if parent[u] == v and low[u] > pre[v]:
                    size = t[v] - tp[u]
                    if k + 1 < size < upper - len(accepted):
                        accepted.append(v)
                        value += 1
        tp[v] = value
        p = parent[v]
        if p:
            acc[p] += value
    return SuppressionPlan(k, root, tuple(accepted), tp, work)


@dataclass(frozen=True)
class KernelRecord:
    """Log of a suppression run.

    ``steps`` holds ``(v, u1, u2)`` in suppression order, with ``u1 < u2`` the
    neighbours of ``v`` at the moment it was suppressed (original ids).
    ``kept[i - 1]`` is the original id of kernel vertex ``i``.
    """

    steps: tuple[tuple[int, int, int], ...]
    original_n: int
    kept: tuple[int, ...]
    kernel: Graph

    def replay(self) -> Graph:
        """Rebuild the original graph by undoing the steps in reverse."""
        kept = self.kept
        edges = {(kept[a - 1], kept[b - 1]) for a, b in self.kernel.iter_edges()}
        edges = {(u, v) if u < v else (v, u) for u, v in edges}
        for v, u1, u2 in reversed(self.steps):
            edges.remove((u1, u2))
            edges.add((u1, v) if u1 < v else (v, u1))
            edges.add((u2, v) if u2 < v else (v, u2))
        adj = [[] for _ in range(self.original_n + 1)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return Graph(self.original_n, adj)


def suppress_all(g: Graph, plan: SuppressionPlan, check: bool = True) -> tuple[Graph, KernelRecord]:
    """Suppress the planned vertices one after another.

    Returns the kernel, relabelled to ``1..n - |S'|`` by ascending original
    id, and the record needed to lift arrangements back.
    """
    n = g.n
    adj = g._adj
    order = plan.order
    # s1[v], s2[v]: current neighbours of a pending vertex; s1[v] == 0 otherwise
    s1 = [0] * (n + 1)
    s2 = [0] * (n + 1)
    for v in order:
        nb = adj[v]
        if len(nb) != 2:
            raise InternalInvariantViolation(f"planned vertex {v} does not have degree 2")
        s1[v], s2[v] = nb
    created = set()
    steps = []
    for v in order:
        u1, u2 = s1[v], s2[v]
        if u1 > u2:
            u1, u2 = u2, u1
        created.discard((u1, v) if u1 < v else (v, u1))
        created.discard((u2, v) if u2 < v else (v, u2))
        if check and ((u1, u2) in created or g.has_edge(u1, u2)):
            raise InternalInvariantViolation(
                f"suppressing {v} would duplicate edge {(u1, u2)}")
        s1[v] = 0
        if s1[u1]:
            if s1[u1] == v:
                s1[u1] = u2
            else:
                s2[u1] = u2
        if s1[u2]:
            if s1[u2] == v:
                s1[u2] = u1
            else:
                s2[u2] = u1
        created.add((u1, u2))
        steps.append((v, u1, u2))

    if not order:
        return g, KernelRecord((), n, tuple(range(1, n + 1)), g)
    removed = bytearray(n + 1)
    for v in order:
        removed[v] = 1
    kept = [v for v in range(1, n + 1) if not removed[v]]
    local = [0] * (n + 1)
    for i, v in enumerate(kept, 1):
        local[v] = i
    kadj = [[] for _ in range(len(kept) + 1)]
    for i, v in enumerate(kept, 1):
        row = kadj[i]
        for w in adj[v]:
            if local[w]:
                row.append(local[w])
    for u, v in created:
        a, b = local[u], local[v]
        kadj[a].append(b)
        kadj[b].append(a)
    kernel = Graph(len(kept), kadj)
    return kernel, KernelRecord(tuple(steps), n, tuple(kept), kernel)


class Gate(enum.Enum):
    ACCEPT = "accept"
    REJECT_TOO_BIG = "reject_too_big"


def max_kernel_vertices(k: int) -> int:
    return 5 * k + 2


def max_kernel_edges(k: int) -> int:
    return 6 * k + 1


def kernel_gate(kernel: Graph, k: int) -> Gate:
    """Reject kernels too large for their optimal net cost to be at most ``k``."""
    if kernel.n > max_kernel_vertices(k) or kernel.m > max_kernel_edges(k):
        return Gate.REJECT_TOO_BIG
    return Gate.ACCEPT


def kernelize(g: Graph, k: int, root: int | None = None, check: bool = True):
    """Plan and suppress in one call; returns ``(kernel, record, plan)``."""
    with gc_paused():
        plan = suppressible_sequence(g, k, root)
        kernel, record = suppress_all(g, plan, check=check)
    return kernel, record, plan


def lift_arrangement(record: KernelRecord, a_kernel: Arrangement) -> Arrangement:
    """Turn an arrangement of the kernel into one of the original graph.

    Steps are undone last-first.  Each suppressed ``v`` goes into a gap
    between its two current neighbours ``u1, u2`` that the edge ``u1u2``
    crosses; the chosen gap is one crossed by the fewest kernel edges
    (leftmost on ties).  When ``u1u2`` is the only edge over that gap the net
    cost is unchanged, which is always the case for an optimal kernel
    arrangement because the two sides of ``u1u2`` then occupy disjoint
    intervals.
    """
    kernel = record.kernel
    if not isinstance(a_kernel, Arrangement):
        a_kernel = Arrangement(a_kernel)
    if a_kernel.n != kernel.n or len(record.kept) != kernel.n:
        raise RecordMismatch(
            f"kernel arrangement has {a_kernel.n} vertices, record keeps {len(record.kept)}")
    if not record.steps:
        if record.original_n != kernel.n:
            raise RecordMismatch("record without steps must keep every vertex")
        return a_kernel

    kept = record.kept
    kn = kernel.n
    kpos = a_kernel.positions
    korder = a_kernel.order()
    # cover[g]: kernel edges crossing the gap between positions g and g+1
    diff = [0] * (kn + 2)
    for a, b in kernel.iter_edges():
        p, q = kpos[a - 1], kpos[b - 1]
        if p > q:
            p, q = q, p
        diff[p] += 1
        diff[q] -= 1
    cover = [0] * (kn + 1)
    running = 0
    for gpos in range(1, kn + 1):
        running += diff[gpos]
        cover[gpos] = running
    opos = {}
    for i, v in enumerate(kept, 1):
        opos[v] = kpos[i - 1]
    original_n = record.original_n
    nxt = [0] * (original_n + 1)
    for p in range(kn - 1):
        nxt[kept[korder[p] - 1]] = kept[korder[p + 1] - 1]
    # anchor[(x, y)] = (left endpoint, vertex just left of the gap) for current edges
    anchor = {}
    for v, u1, u2 in reversed(record.steps):
        key = (u1, u2)
        hit = anchor.pop(key, None)
        if hit is None:
            if u1 not in opos or u2 not in opos:
                raise RecordMismatch(f"edge {key} is neither in the kernel nor restored")
            p, q = opos[u1], opos[u2]
            left = u1 if p < q else u2
            lo, hi = (p, q) if p < q else (q, p)
            best = lo
            for gpos in range(lo + 1, hi):
                if cover[gpos] < cover[best]:
                    best = gpos
            hit = (left, kept[korder[best - 1] - 1])
        left, gap = hit
        right = u2 if left == u1 else u1
        nxt[v] = nxt[gap]
        nxt[gap] = v
        anchor[(left, v) if left < v else (v, left)] = (left, gap)
        anchor[(v, right) if v < right else (right, v)] = (v, v)
    order = []
    cur = kept[korder[0] - 1]
    while cur:
        order.append(cur)
        cur = nxt[cur]
    if len(order) != original_n:
        raise RecordMismatch("record does not cover every original vertex")
    return Arrangement.from_order(order)
