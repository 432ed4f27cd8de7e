"""Labeled free trees: constructions, diameter machinery, canonical forms, enumeration.

Vertices are always labeled ``0..n-1``.  Trees are immutable and validated on
construction, so every ``Tree`` in circulation is connected and acyclic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx

# Largest vertex count accepted by the exhaustive enumerators.
MAX_ENUM_N = 20


class TreeError(ValueError):
    """Raised for invalid tree input or an infeasible construction."""


class EnumerationBoundError(TreeError):
    """Requested enumeration is above MAX_ENUM_N."""


@dataclass(frozen=True)
class Tree:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise TreeError("a tree needs at least one vertex")
        if len(self.adjacency) != n:
            raise TreeError("adjacency length does not match n")
        degree_sum = 0
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise TreeError(f"neighbors of {v} must be sorted without duplicates")
            for w in nbrs:
                if not 0 <= w < n or w == v:
                    raise TreeError(f"bad neighbor {w} of vertex {v}")
                if v not in self.adjacency[w]:
                    raise TreeError(f"asymmetric edge {v}-{w}")
            degree_sum += len(nbrs)
        if degree_sum != 2 * (n - 1):
            raise TreeError(f"expected {n - 1} edges, got {degree_sum // 2}")
        if len(_bfs_dist(self.adjacency, 0)) != n:
            raise TreeError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise TreeError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return Tree.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Tree(n={self.n}, edges={self.edges()})"


class RootedTree(NamedTuple):
    tree: Tree
    root: int

    def check(self):
        if not 0 <= self.root < self.tree.n:
            raise TreeError(f"root {self.root} outside 0..{self.tree.n - 1}")
        return self


def _bfs_dist(adjacency, source: int, removed=frozenset()) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in dist and w not in removed:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------- constructions


def path(n: int) -> Tree:
    if n < 1:
        raise TreeError("path needs n >= 1")
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise TreeError("star needs n >= 2")
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def caterpillar_T(m: Sequence[int]) -> Tree:
    """Caterpillar T(m_1, ..., m_{d-1}).

    Labels put a diametral path on ``0..d``: one leaf of ``v_1`` is 0, spine
    vertex ``v_i`` is ``i``, one leaf of ``v_{d-1}`` is ``d``.  The remaining
    leaves follow in spine order.
    """
    m = list(m)
    if not m or any(x < 0 for x in m):
        raise TreeError("leaf counts must be non-negative and non-empty")
    if len(m) == 1:
        if m[0] < 2:
            raise TreeError("T(m_1) needs m_1 >= 2")
    elif m[0] < 1 or m[-1] < 1:
        raise TreeError("T(m) needs m_1 >= 1 and m_{d-1} >= 1")
    d = len(m) + 1
    n = d - 1 + sum(m)
    edges = [(i, i + 1) for i in range(d)]
    extra = list(m)
    extra[0] -= 1
    extra[-1] -= 1
    nxt = d + 1
    for i, count in enumerate(extra, start=1):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Tree.from_edges(n, edges)


def caterpillar_C(l: int, r: int, k: int) -> Tree:
    """C(l, r, k): path ``0..l+r`` with ``k`` leaves (labels ``l+r+1..``) at vertex ``l``."""
    if min(l, r, k) < 0:
        raise TreeError("l, r, k must be non-negative")
    if l + r == 0 and k >= 2:
        raise TreeError("C(0, 0, k) with k >= 2 is a star, not a C-form caterpillar")
    p = l + r
    edges = [(i, i + 1) for i in range(p)]
    edges += [(l, p + 1 + t) for t in range(k)]
    return Tree.from_edges(p + 1 + k, edges)


def join_edge(a: RootedTree, b: RootedTree) -> Tree:
    """(G1, a) o (G2, b): disjoint union plus the edge between the roots."""
    a, b = RootedTree(*a).check(), RootedTree(*b).check()
    off = a.tree.n
    edges = a.tree.edges() + [(u + off, v + off) for u, v in b.tree.edges()]
    edges.append((a.root, b.root + off))
    return Tree.from_edges(off + b.tree.n, edges)


def join_vertex(a: RootedTree, b: RootedTree) -> Tree:
    """(G1, a) o K1 o (G2, b); the new middle vertex takes the last label."""
    a, b = RootedTree(*a).check(), RootedTree(*b).check()
    off = a.tree.n
    mid = off + b.tree.n
    edges = a.tree.edges() + [(u + off, v + off) for u, v in b.tree.edges()]
    edges += [(a.root, mid), (b.root + off, mid)]
    return Tree.from_edges(mid + 1, edges)


# ---------------------------------------------------------------- structure


def longest_path(t: Tree) -> list[int]:
    """One diametral path ``v_0..v_d`` (double BFS)."""
    dist = _bfs_dist(t.adjacency, 0)
    u = max(dist, key=lambda v: (dist[v], -v))
    dist = _bfs_dist(t.adjacency, u)
    w = max(dist, key=lambda v: (dist[v], -v))
    out = [w]
    while out[-1] != u:
        cur = out[-1]
        out.append(next(x for x in t.adjacency[cur] if dist.get(x) == dist[cur] - 1))
    return out[::-1]


def diameter(t: Tree) -> int:
    return len(longest_path(t)) - 1


def eccentricities(t: Tree) -> list[int]:
    return [max(_bfs_dist(t.adjacency, v).values()) for v in range(t.n)]


def center(t: Tree) -> list[int]:
    """The center (one vertex) or bicenter (two vertices) of the tree."""
    p = longest_path(t)
    d = len(p) - 1
    if d % 2 == 0:
        return [p[d // 2]]
    return sorted([p[d // 2], p[d // 2 + 1]])


def delete_vertices(t: Tree, vs: Iterable[int]) -> list[tuple[Tree, tuple[int, ...]]]:
    """Components of ``t - vs`` as (tree, back_map) pairs.

    ``back_map[i]`` is the original label of component vertex ``i``.  Components
    are ordered by their smallest original label.
    """
    removed = frozenset(vs)
    seen: set[int] = set()
    out = []
    for s in range(t.n):
        if s in removed or s in seen:
            continue
        comp = sorted(_bfs_dist(t.adjacency, s, removed))
        seen.update(comp)
        index = {v: i for i, v in enumerate(comp)}
        edges = [(index[u], index[v]) for u in comp for v in t.adjacency[u]
                 if v in index and u < v]
        out.append((Tree.from_edges(len(comp), edges), tuple(comp)))
    return out


def is_caterpillar(t: Tree) -> bool:
    inner = [v for v in range(t.n) if t.degree(v) > 1]
    if len(inner) <= 1:
        return True
    inner_set = set(inner)
    # The non-leaf vertices induce a subtree; it is a path iff no vertex has
    # three or more non-leaf neighbors.
    return all(sum(w in inner_set for w in t.adjacency[v]) <= 2 for v in inner)


# ---------------------------------------------------------------- canonical forms


def _rooted_code(adjacency, root: int, parent: int) -> str:
    # Iterative post-order so deep paths do not hit the recursion limit.
    order = []
    stack = [(root, parent)]
    parents = {}
    while stack:
        v, p = stack.pop()
        parents[v] = p
        order.append(v)
        for w in adjacency[v]:
            if w != p:
                stack.append((w, v))
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in adjacency[v] if w != parents[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-invariant code of the free tree, rooted at its (bi)center."""
    c = center(t)
    if len(c) == 1:
        return b"C" + _rooted_code(t.adjacency, c[0], -1).encode()
    a, b = c
    left = _rooted_code(t.adjacency, a, b)
    right = _rooted_code(t.adjacency, b, a)
    lo, hi = sorted([left, right])
    return b"B" + lo.encode() + b"|" + hi.encode()


def is_isomorphic(s: Tree, t: Tree) -> bool:
    return s.n == t.n and canonical_code(s) == canonical_code(t)


# ---------------------------------------------------------------- enumeration


def _check_bound(n: int):
    if n < 1:
        raise TreeError("n must be >= 1")
    if n > MAX_ENUM_N:
        raise EnumerationBoundError(f"enumeration bound exceeded: n={n} > {MAX_ENUM_N}")


def enumerate_trees(n: int, part: tuple[int, int] = (0, 1)) -> Iterator[Tree]:
    """One tree per isomorphism class on ``n`` vertices.

    ``part=(i, k)`` yields only every k-th tree starting at index i, which lets
    independent workers split the stream.
    """
    _check_bound(n)
    i, k = part
    if n == 1:
        if i == 0:
            yield Tree(1, ((),))
        return
    for idx, g in enumerate(nx.nonisomorphic_trees(n)):
        if idx % k == i:
            yield Tree.from_edges(n, g.edges())


def enumerate_trees_diameter(n: int, d: int, part: tuple[int, int] = (0, 1)) -> Iterator[Tree]:
    """Isomorphism classes of T(n, d); infeasible (n, d) gives an empty stream."""
    _check_bound(n)
    if not 0 <= d <= n - 1 or (n >= 3 and d < 2) or (n == 2 and d != 1) or (n == 1 and d != 0):
        return
    for t in enumerate_trees(n, part):
        if diameter(t) == d:
            yield t


def trees_path_plus_leaf(d: int) -> list[Tree]:
    """All of T(d+2, d): a path on d+1 vertices with one leaf at an interior vertex.

    One representative ``C(i, d-i, 1)`` per class, ``1 <= i <= d // 2``.
    """
    if d < 2:
        raise TreeError("T(d+2, d) needs d >= 2")
    return [caterpillar_C(i, d - i, 1) for i in range(1, d // 2 + 1)]
