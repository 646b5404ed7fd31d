"""Parameterized linear arrangement above the edge count.

Decides whether a graph has a linear arrangement whose net cost (total edge
length minus the number of edges) is at most ``k``, via degree-2 suppression
to a small kernel and bounded enumeration of spanning-tree arrangements.
"""

from .bounds import count_path_arrangements, count_tree_arrangements, verify_bounds
from .decomposition import bridgeless_components, dfs_tree_with_subtree_sizes, find_bridges
from .estimators import ExactArrangement, Kernelizer, LinearArrangementSolver
from .exceptions import *  # noqa: F401,F403
from .generators import generate_instance
from .graph import Arrangement, Graph, build_graph, connected_components, cost, net_cost
from .graphio import format_graph, parse_graph, parse_graph_text
from .kernel import kernelize, lift_arrangement, suppress_all, suppressible_sequence
from .oracle import exact_ola_dp, exact_ola_enum
from .search import best_arrangement, enumerate_arrangements, solve

__version__ = "0.1.0"
