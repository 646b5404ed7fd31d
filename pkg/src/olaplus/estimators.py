"""Estimator-style front end over the solver, the kernelizer and the oracles.

A single graph plays the role of ``X``; any input accepted by
:func:`olaplus.validation.check_graph` works.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Arrangement, net_cost
from .kernel import kernel_gate, lift_arrangement, suppress_all, suppressible_sequence
from .oracle import exact_ola_dp, exact_ola_enum
from .search import solve
from .validation import check_budget, check_graph

__all__ = ["LinearArrangementSolver", "Kernelizer", "ExactArrangement"]


class LinearArrangementSolver(BaseEstimator):
    """Decide ``ola+(G) <= k`` and return an optimal arrangement when it is.

    Parameters
    ----------
    k : int
        Net-cost budget.
    symmetry_prune : bool
        Enumerate only one of each arrangement and its mirror image.
    n_jobs : int
        Worker processes across connected components.

    Attributes
    ----------
    report_ : SolveReport
    decision_ : bool
    ola_plus_ : int or None
    arrangement_ : Arrangement or None
    """

    def __init__(self, k=1, symmetry_prune=False, n_jobs=1):
        self.k = k
        self.symmetry_prune = symmetry_prune
        self.n_jobs = n_jobs

    def _solve(self, X):
        g = check_graph(X)
        k = check_budget(self.k)
        return g, solve(g, k, mirror_free=bool(self.symmetry_prune), n_jobs=self.n_jobs)

    def fit(self, X, y=None):
        self.graph_, self.report_ = self._solve(X)
        self.decision_ = self.report_.decision
        self.ola_plus_ = self.report_.net_cost_opt
        self.arrangement_ = self.report_.arrangement
        return self

    def predict(self, X):
        """True iff ``X`` has an arrangement of net cost at most ``k``."""
        check_is_fitted(self)
        g = check_graph(X)
        if g == self.graph_:
            return self.decision_
        return self._solve(g)[1].decision

    def transform(self, X):
        """Position array (indexed by ``vertex - 1``) of an optimal
        arrangement; raises ``ValueError`` when none fits the budget."""
        check_is_fitted(self)
        g = check_graph(X)
        report = self.report_ if g == self.graph_ else self._solve(g)[1]
        if not report.decision:
            raise ValueError(f"no arrangement of net cost <= {report.k}")
        return np.asarray(report.arrangement.positions, dtype=np.int64)

    def fit_transform(self, X, y=None):
        return self.fit(X).transform(X)

    def score(self, X, y=None):
        """Negated optimal net cost, or ``-inf`` above the budget."""
        check_is_fitted(self)
        g = check_graph(X)
        report = self.report_ if g == self.graph_ else self._solve(g)[1]
        return -float(report.net_cost_opt) if report.decision else float("-inf")


class Kernelizer(TransformerMixin, BaseEstimator):
    """Suppress every planned degree-2 vertex of a connected graph.

    ``transform`` returns the kernel graph; ``inverse_transform`` lifts an
    arrangement of the kernel back to the fitted graph.
    """

    def __init__(self, k=1):
        self.k = k

    def fit(self, X, y=None):
        g = check_graph(X)
        k = check_budget(self.k)
        self.graph_ = g
        self.plan_ = suppressible_sequence(g, k)
        self.kernel_, self.record_ = suppress_all(g, self.plan_)
        self.gate_ = kernel_gate(self.kernel_, k)
        return self

    def transform(self, X):
        check_is_fitted(self)
        g = check_graph(X)
        if g == self.graph_:
            return self.kernel_
        kernel, _ = suppress_all(g, suppressible_sequence(g, check_budget(self.k)))
        return kernel

    def inverse_transform(self, X):
        """Lift a kernel arrangement (``Arrangement`` or position list)."""
        check_is_fitted(self)
        a = X if isinstance(X, Arrangement) else Arrangement(np.asarray(X).ravel().tolist())
        return lift_arrangement(self.record_, a)


class ExactArrangement(BaseEstimator):
    """Exact minimum linear arrangement of a small graph.

    ``method`` is ``"dp"`` (subset dynamic program, n <= 24) or ``"enum"``
    (all permutations, n <= 9).
    """

    def __init__(self, method="dp"):
        self.method = method

    def fit(self, X, y=None):
        if self.method not in ("dp", "enum"):
            raise ValueError(f"method must be 'dp' or 'enum', got {self.method!r}")
        g = check_graph(X)
        result = exact_ola_dp(g) if self.method == "dp" else exact_ola_enum(g)
        self.graph_ = g
        self.result_ = result
        self.ola_ = result.ola
        self.ola_plus_ = result.ola_plus
        self.arrangement_ = result.witness
        return self

    def transform(self, X):
        check_is_fitted(self)
        g = check_graph(X)
        a = self.arrangement_ if g == self.graph_ else ExactArrangement(self.method).fit(g).arrangement_
        return np.asarray(a.positions, dtype=np.int64)

    def fit_transform(self, X, y=None):
        return self.fit(X).transform(X)

    def score(self, X, y=None):
        """Negated net cost of the fitted optimum measured on ``X``."""
        check_is_fitted(self)
        return -float(net_cost(check_graph(X), self.arrangement_))
