"""Input coercion for the estimator front end."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import BadParameters
from .graph import Graph, build_graph

__all__ = ["check_graph", "check_budget"]


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepted: a :class:`Graph`; a pair ``(n, edges)``; or a square symmetric
    0/1 adjacency matrix (dense array-like or scipy sparse) with zero
    diagonal.  Row ``i`` of a matrix is vertex ``i + 1``.
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], numbers.Integral):
        return build_graph(int(X[0]), X[1])
    A = check_array(X, accept_sparse=("csr", "csc", "coo"), ensure_2d=True,
                    ensure_min_samples=0, ensure_min_features=0, dtype=None)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    n = A.shape[0]
    if hasattr(A, "tocoo"):
        coo = A.tocoo()
        rows, cols, vals = coo.row, coo.col, coo.data
        keep = vals != 0
        rows, cols, vals = rows[keep], cols[keep], vals[keep]
    else:
        rows, cols = np.nonzero(A)
        vals = A[rows, cols]
    if np.any(vals != 1):
        raise ValueError("adjacency entries must be 0 or 1")
    if np.any(rows == cols):
        raise ValueError("adjacency matrix has a nonzero diagonal (loop edge)")
    upper = rows < cols
    forward = set(zip(rows[upper].tolist(), cols[upper].tolist()))
    backward = set(zip(cols[~upper].tolist(), rows[~upper].tolist()))
    if forward != backward:
        raise ValueError("adjacency matrix must be symmetric")
    return build_graph(n, sorted((u + 1, v + 1) for u, v in forward))


def check_budget(k, name: str = "k") -> int:
    if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 0:
        raise BadParameters(f"{name} must be a nonnegative integer, got {k!r}")
    return int(k)
