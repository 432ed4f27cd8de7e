"""Exact spectral computations on trees, with a focus on the second largest
adjacency eigenvalue over trees of fixed order and diameter."""

from .center import SpectralCenter, SpectralCenterError, spectral_center, verify_center
from .extremal import (
    ExtremalCertificate,
    MaximizerParams,
    cor16_bound,
    lambda1_maximizer,
    lambda2_max_trees_global,
    lambda2_maximizer_bruteforce,
    lambda2_maximizer_construct,
    lambda2_minimizer_bruteforce,
    verify_min_structure,
)
from .poly import IntPoly, caterpillar_poly, charpoly, path_poly
from .roots import AlgebraicValue, Ordering, compare, kth_largest_root, lambda1, lambda2, lambda_k, to_float
from .smith import is_smith, is_smith_forest
from .trees import (
    EnumerationBoundError,
    RootedTree,
    Tree,
    TreeError,
    canonical_code,
    caterpillar_C,
    caterpillar_T,
    enumerate_trees,
    enumerate_trees_diameter,
    path,
    star,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicValue", "EnumerationBoundError", "ExtremalCertificate", "IntPoly", "MaximizerParams",
    "Ordering", "RootedTree", "SpectralCenter", "SpectralCenterError", "Tree", "TreeError",
    "canonical_code", "caterpillar_C", "caterpillar_T", "caterpillar_poly", "charpoly", "compare",
    "cor16_bound", "enumerate_trees", "enumerate_trees_diameter", "is_smith", "is_smith_forest",
    "kth_largest_root", "lambda1", "lambda1_maximizer", "lambda2", "lambda2_max_trees_global",
    "lambda2_maximizer_bruteforce", "lambda2_maximizer_construct", "lambda2_minimizer_bruteforce",
    "lambda_k", "path", "path_poly", "spectral_center", "star", "to_float", "verify_center",
    "verify_min_structure",
]
