"""Brute-force tree enumeration and weighted sums (the certification oracle).

The hot enumeration loop has two interchangeable kernels: a compiled
Cython extension and a pure-Python fallback, chosen at import time (see
``_backend``).  Everything else is plain Python.
"""

from ._backend import BACKEND, MAX_SIZE, backend_name, signature_counts
from .trees import (
    BRUTE_FORCE_LIMIT,
    LEAF,
    OrderedTree,
    compositions,
    enumerate_trees,
    format_tree,
    hook_lengths,
    labellings_bruteforce,
    labellings_hook,
    labellings_recursive,
    parse_tree,
    tree_weight_hook,
    weighted_sum,
)

__all__ = [
    "BACKEND",
    "MAX_SIZE",
    "BRUTE_FORCE_LIMIT",
    "LEAF",
    "OrderedTree",
    "backend_name",
    "compositions",
    "enumerate_trees",
    "format_tree",
    "hook_lengths",
    "labellings_bruteforce",
    "labellings_hook",
    "labellings_recursive",
    "parse_tree",
    "signature_counts",
    "tree_weight_hook",
    "weighted_sum",
]
