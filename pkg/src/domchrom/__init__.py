"""Exact dominator colorings of oriented trees.

A dominator coloring of a digraph is a proper vertex coloring in which every
vertex having out-neighbors contains some entire color class inside its
out-neighborhood.  This package computes the minimum number of colors for
orientations of trees exactly, emits independently checkable certificates,
evaluates the closed forms known for special families, and runs exhaustive
verification campaigns over small instances.
"""

from ._backend import BACKEND
from .coloring import (
    Coloring,
    DominatorCertificate,
    ImproperEdge,
    NoDominatedClass,
    SINK_EXEMPT,
    canonicalize,
    dominated_classes,
    is_proper,
    recheck_certificate,
    verify_dominator,
)
from .solver import (
    SearchStats,
    SolveOptions,
    SolveResult,
    brute_force_chi,
    greedy_upper_bound,
    solve_exact,
    trivial_lower_bound,
)
from .trees import (
    BaseTree,
    DegreeProfile,
    OrientedTree,
    RootClassification,
    build_tree,
    classify_rooted,
    degree_profile,
    delete_leaf,
    directed_leaf_count,
    reverse,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BaseTree",
    "Coloring",
    "DegreeProfile",
    "DominatorCertificate",
    "ImproperEdge",
    "NoDominatedClass",
    "OrientedTree",
    "RootClassification",
    "SINK_EXEMPT",
    "SearchStats",
    "SolveOptions",
    "SolveResult",
    "brute_force_chi",
    "build_tree",
    "canonicalize",
    "classify_rooted",
    "degree_profile",
    "delete_leaf",
    "directed_leaf_count",
    "dominated_classes",
    "greedy_upper_bound",
    "is_proper",
    "recheck_certificate",
    "reverse",
    "solve_exact",
    "trivial_lower_bound",
    "verify_dominator",
    "__version__",
]
