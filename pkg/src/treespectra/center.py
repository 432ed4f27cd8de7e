"""Spectral center of a tree (spectral vertex or spectral edge).

The center is found through the subtree characterization: the unique minimal
vertex set Y of size at most two with lambda_1(T - Y) <= lambda_2(T).  All
comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import graph6
from .roots import AlgebraicValue, Ordering, compare, lambda1, lambda2, to_float
from .trees import RootedTree, Tree, delete_vertices


class SpectralCenterError(RuntimeError):
    """Neither a spectral vertex nor a unique spectral edge was found."""


@dataclass
class SpectralCenter:
    kind: str  # "vertex" or "edge"
    center: tuple[int, ...]
    halves: tuple[RootedTree, RootedTree]
    lambda2: AlgebraicValue
    # original labels of each half's vertices
    half_maps: tuple[tuple[int, ...], tuple[int, ...]] = ((), ())

    def to_json(self, decimals: int = 10) -> dict:
        return {
            "kind": self.kind,
            "center": list(self.center),
            "lambda2": {**self.lambda2.to_json(), "decimal": to_float(self.lambda2, decimals)},
            "halves": [
                {"graph6": graph6.encode(h.tree), "root": h.root, "vertices": list(m)}
                for h, m in zip(self.halves, self.half_maps)
            ],
        }


def _component_orders(comps, l2: AlgebraicValue) -> list[Ordering]:
    # K1 components have lambda_1 = 0 like any other tree; compare exactly.
    return [compare(lambda1(c, None), l2) for c, _ in comps]


def _forest_le(comps, l2) -> tuple[bool, list[Ordering]]:
    orders = _component_orders(comps, l2)
    return all(o is not Ordering.GREATER for o in orders), orders


def _is_vertex_center(t: Tree, v: int, l2: AlgebraicValue):
    comps = delete_vertices(t, [v])
    ok, orders = _forest_le(comps, l2)
    if not ok or Ordering.EQUAL not in orders:
        return None
    return comps, orders


def _edge_halves(t: Tree, a: int, b: int):
    """Components of T - ab as rooted trees (H1 containing a, H2 containing b)."""
    out = []
    for root, other in ((a, b), (b, a)):
        # Deleting `other` leaves the side of `root` as one component.
        for comp, back in delete_vertices(t, [other]):
            if root in back:
                out.append((RootedTree(comp, back.index(root)), back))
                break
    return out


def _sandwich(half: RootedTree, l2: AlgebraicValue) -> bool:
    """lambda_1(H - root) < lambda_2(T) < lambda_1(H)."""
    if compare(lambda1(half.tree, None), l2) is not Ordering.GREATER:
        return False
    for comp, _ in delete_vertices(half.tree, [half.root]):
        if compare(lambda1(comp, None), l2) is not Ordering.LESS:
            return False
    return True


def _edge_condition(t: Tree, a: int, b: int, l2: AlgebraicValue) -> bool:
    orders = _component_orders(delete_vertices(t, [a, b]), l2)
    return all(o is Ordering.LESS for o in orders)


def spectral_center(t: Tree) -> SpectralCenter:
    if t.n < 2:
        raise ValueError("spectral center needs n >= 2")
    l2 = lambda2(t, None)
    for v in range(t.n):
        found = _is_vertex_center(t, v, l2)
        if found is None:
            continue
        comps, orders = found
        tight = [c for c, o in zip(comps, orders) if o is Ordering.EQUAL]
        if len(tight) < 2:
            raise SpectralCenterError(f"vertex {v}: fewer than two components attain lambda_2")
        halves, maps = [], []
        for comp, back in tight[:2]:
            root = next(i for i, u in enumerate(back) if v in t.adjacency[u])
            halves.append(RootedTree(comp, root))
            maps.append(back)
        return SpectralCenter("vertex", (v,), tuple(halves), l2, tuple(maps))

    edges = [(a, b) for a, b in t.edges() if _edge_condition(t, a, b, l2)]
    if len(edges) != 1:
        raise SpectralCenterError(f"expected exactly one spectral edge, found {edges}")
    a, b = edges[0]
    sides = _edge_halves(t, a, b)
    if not all(_sandwich(h, l2) for h, _ in sides):
        raise SpectralCenterError(f"edge {a}-{b} fails the strict sandwich")
    return SpectralCenter("edge", (a, b), (sides[0][0], sides[1][0]), l2, (sides[0][1], sides[1][1]))


def verify_center(t: Tree, c: SpectralCenter) -> bool:
    """Re-check every exact inequality of the claimed center kind."""
    l2 = lambda2(t, None)
    if c.kind == "vertex":
        (v,) = c.center
        found = _is_vertex_center(t, v, l2)
        if found is None:
            return False
        return found[1].count(Ordering.EQUAL) >= 2
    if c.kind == "edge":
        a, b = c.center
        if b not in t.adjacency[a] or not _edge_condition(t, a, b, l2):
            return False
        return all(_sandwich(h, l2) for h, _ in _edge_halves(t, a, b))
    return False


def vertex_center(v: int) -> SpectralCenter:
    """A bare claim 'v is the spectral vertex' for use with verify_center."""
    return SpectralCenter("vertex", (v,), (), None)  # type: ignore[arg-type]


def edge_center(a: int, b: int) -> SpectralCenter:
    return SpectralCenter("edge", (a, b), (), None)  # type: ignore[arg-type]


def vertex_candidates(t: Tree) -> list[int]:
    """All vertices meeting the spectral-vertex condition (uniqueness check)."""
    l2 = lambda2(t, None)
    return [v for v in range(t.n) if _is_vertex_center(t, v, l2) is not None]


def edge_candidates(t: Tree) -> list[tuple[int, int]]:
    l2 = lambda2(t, None)
    return [(a, b) for a, b in t.edges() if _edge_condition(t, a, b, l2)]


def center_kind(t: Tree) -> Optional[str]:
    return spectral_center(t).kind
