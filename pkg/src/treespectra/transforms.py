"""Spectral-radius-monotone perturbations: edge rotation, Kelmans operation, contraction."""

from __future__ import annotations

from .trees import Tree, TreeError


def rotate_edge(t: Tree, u: int, v: int, w: int) -> Tree:
    """T - uv + uw.  Requires v ~ u, u !~ w; the result must again be a tree."""
    adj = t.adjacency
    if v not in adj[u]:
        raise TreeError(f"{u}-{v} is not an edge")
    if w == u or w in adj[u]:
        raise TreeError(f"{w} must be a non-neighbor of {u}")
    edges = [e for e in t.edges() if set(e) != {u, v}] + [(u, w)]
    return Tree.from_edges(t.n, edges)


def kelmans(t: Tree, u: int, v: int) -> Tree:
    """Move every edge ua with a !~ v, a != v over to va; validated as a tree."""
    if u == v:
        raise TreeError("Kelmans operation needs u != v")
    adj = t.adjacency
    moved = [a for a in adj[u] if a != v and a not in adj[v]]
    if not moved:
        return t
    moved_set = set(moved)
    edges = [e for e in t.edges() if not (u in e and (set(e) - {u}) <= moved_set)]
    edges += [(v, a) for a in moved]
    return Tree.from_edges(t.n, edges)


def internal_path_through(t: Tree, u: int, v: int) -> list[int] | None:
    """The internal path containing edge uv, or None when uv is not on one.

    An internal path runs between two vertices of degree >= 3 through vertices
    of degree exactly 2.
    """
    if v not in t.adjacency[u]:
        return None

    def walk(start: int, prev: int) -> list[int] | None:
        seq = [start]
        while t.degree(seq[-1]) == 2:
            nxt = next(x for x in t.adjacency[seq[-1]] if x != prev)
            prev = seq[-1]
            seq.append(nxt)
        return seq if t.degree(seq[-1]) >= 3 else None

    left = walk(u, v)
    right = walk(v, u)
    if left is None or right is None:
        return None
    return left[::-1] + right


def contract_internal_edge(t: Tree, u: int, v: int, return_map: bool = False):
    """Contract uv on an internal path: u's other edges move to v, u is deleted.

    Labels are compacted by renaming the last label ``n-1`` to ``u``.  With
    ``return_map`` the old-to-new label map is returned as well.
    """
    if internal_path_through(t, u, v) is None:
        raise TreeError(f"{u}-{v} does not lie on an internal path")
    last = t.n - 1
    relabel = {x: x for x in range(t.n) if x != u}
    if u != last:
        relabel[last] = u
    edges = []
    for a, b in t.edges():
        if u in (a, b):
            other = b if a == u else a
            if other == v:
                continue
            a, b = v, other
        edges.append((relabel[a], relabel[b]))
    out = Tree.from_edges(t.n - 1, edges)
    return (out, relabel) if return_map else out
