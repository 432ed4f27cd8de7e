"""Smith graphs among trees: connected graphs with spectral radius at most 2."""

from __future__ import annotations

from typing import Iterable

from .poly import charpoly
from .roots import gershgorin_bound, sturm_count
from .trees import Tree


def is_smith(t: Tree) -> bool:
    # lambda_1 <= 2 iff no root of Phi lies in (2, bound].
    return sturm_count(charpoly(t), 2, gershgorin_bound(t)) == 0


def is_smith_forest(forest: Iterable[Tree]) -> bool:
    return all(is_smith(t) for t in forest)
