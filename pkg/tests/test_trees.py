import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import prufer_classes, prufer_tree
from treespectra.trees import (
    MAX_ENUM_N,
    EnumerationBoundError,
    RootedTree,
    Tree,
    TreeError,
    canonical_code,
    caterpillar_C,
    caterpillar_T,
    center,
    delete_vertices,
    diameter,
    enumerate_trees,
    enumerate_trees_diameter,
    is_caterpillar,
    is_isomorphic,
    join_edge,
    join_vertex,
    longest_path,
    path,
    star,
    trees_path_plus_leaf,
)

FREE_TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]


def codes(trees):
    return sorted(canonical_code(t) for t in trees)


class TestTreeValidation:
    def test_rejects_cycle(self):
        with pytest.raises(TreeError):
            Tree.from_edges(3, [(0, 1), (1, 2), (2, 0)])

    def test_rejects_forest(self):
        with pytest.raises(TreeError):
            Tree.from_edges(4, [(0, 1), (2, 3), (0, 1)])
        with pytest.raises(TreeError):
            Tree(4, ((1,), (0,), (3,), (2,)))

    def test_rejects_unsorted_and_asymmetric(self):
        with pytest.raises(TreeError):
            Tree(3, ((2, 1), (0,), (0,)))
        with pytest.raises(TreeError):
            Tree(2, ((1,), ()))

    def test_rejects_self_loop_and_range(self):
        with pytest.raises(TreeError):
            Tree(1, ((0,),))
        with pytest.raises(TreeError):
            Tree.from_edges(2, [(0, 2)])

    def test_hashable_and_immutable(self):
        t = path(3)
        assert hash(t) == hash(path(3))
        with pytest.raises(AttributeError):
            t.n = 4


class TestConstructions:
    def test_path(self):
        assert path(1).n == 1 and path(1).edges() == []
        assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
        assert diameter(path(4)) == 3
        assert diameter(path(6)) == 5
        with pytest.raises(TreeError):
            path(0)

    def test_star(self):
        assert is_isomorphic(star(2), path(2))
        s = star(5)
        assert diameter(s) == 2 and s.degree(0) == 4
        with pytest.raises(TreeError):
            star(1)

    def test_caterpillar_T(self):
        t = caterpillar_T([4, 1, 2, 2])
        assert t.n == 13 and diameter(t) == 5
        assert is_isomorphic(caterpillar_T([1, 1]), path(4))
        for n in range(5, 12):
            assert diameter(caterpillar_T([n - 3, 1])) == 3
        assert is_isomorphic(caterpillar_T([3]), star(4))
        with pytest.raises(TreeError):
            caterpillar_T([0, 2])
        with pytest.raises(TreeError):
            caterpillar_T([1])
        with pytest.raises(TreeError):
            caterpillar_T([])

    def test_caterpillar_T_labels_diametral_path(self):
        t = caterpillar_T([2, 0, 3, 1])
        assert diameter(t) == 5
        for i in range(5):
            assert i + 1 in t.adjacency[i]
        assert t.degree(1) == 3 and t.degree(3) == 5

    def test_caterpillar_C(self):
        t = caterpillar_C(2, 3, 3)
        assert t.n == 9 and diameter(t) == 5
        assert canonical_code(t) == canonical_code(caterpillar_C(3, 2, 3))
        assert is_isomorphic(caterpillar_C(1, 2, 0), path(4))
        assert t.adjacency[2] == (1, 3, 6, 7, 8)
        assert is_isomorphic(caterpillar_C(0, 0, 1), path(2))
        with pytest.raises(TreeError):
            caterpillar_C(0, 0, 2)
        with pytest.raises(TreeError):
            caterpillar_C(-1, 2, 0)

    def test_join_edge(self):
        p1 = RootedTree(path(1), 0)
        assert is_isomorphic(join_edge(p1, p1), path(2))
        s = RootedTree(star(4), 1)
        assert is_isomorphic(join_edge(s, s), caterpillar_T([2, 0, 0, 2]))
        assert is_isomorphic(join_edge(RootedTree(path(3), 2), RootedTree(path(2), 0)), path(5))

    def test_join_vertex(self):
        p1 = RootedTree(path(1), 0)
        j = join_vertex(p1, p1)
        assert is_isomorphic(j, path(3)) and j.degree(2) == 2
        t = join_vertex(RootedTree(path(2), 0), RootedTree(path(3), 1))
        assert t.n == 6 and diameter(t) == 4
        k = 3
        s = RootedTree(star(k + 2), 1)
        u = join_vertex(s, s)
        assert diameter(u) == 6 and u.n == 2 * (k + 2) + 1

    def test_join_path_diameter(self):
        for a in range(1, 7):
            for b in range(1, 7):
                t = join_edge(RootedTree(path(a), a - 1), RootedTree(path(b), 0))
                assert diameter(t) == a + b - 1

    def test_root_out_of_range(self):
        with pytest.raises(TreeError):
            join_edge(RootedTree(path(2), 5), RootedTree(path(1), 0))


class TestStructure:
    def test_diameter_examples(self):
        assert diameter(star(6)) == 2
        assert diameter(caterpillar_C(2, 3, 3)) == 5
        assert diameter(path(10)) == 9

    def test_longest_path_is_a_path(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(2, 15)
            t = prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)
            p = longest_path(t)
            assert len(set(p)) == len(p) == diameter(t) + 1
            assert all(p[i + 1] in t.adjacency[p[i]] for i in range(len(p) - 1))
            g = nx.Graph(t.edges())
            g.add_nodes_from(range(n))
            assert diameter(t) == nx.diameter(g)
            assert sorted(center(t)) == sorted(nx.center(g))

    def test_delete_vertices(self):
        comps = delete_vertices(path(5), [2])
        assert [c.n for c, _ in comps] == [2, 2]
        assert [m for _, m in comps] == [(0, 1), (3, 4)]
        assert [c.n for c, _ in delete_vertices(star(5), [0])] == [1, 1, 1, 1]
        sizes = sorted(c.n for c, _ in delete_vertices(caterpillar_C(2, 2, 2), [2]))
        assert sizes == [1, 1, 2, 2]
        assert delete_vertices(path(2), [0, 1]) == []

    def test_is_caterpillar(self):
        assert is_caterpillar(caterpillar_T([4, 1, 2, 2]))
        assert is_caterpillar(star(5))
        spider = Tree.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert not is_caterpillar(spider)
        assert is_caterpillar(path(1))


class TestCanonicalForms:
    def test_distinguishes(self):
        assert canonical_code(path(5)) != canonical_code(star(5))

    def test_six_vertex_classes(self):
        trees = list(enumerate_trees(6))
        assert len(set(codes(trees))) == 6

    def test_relabel_invariance(self):
        rng = random.Random(11)
        for n in range(1, 11):
            for t in enumerate_trees(n):
                c = canonical_code(t)
                for _ in range(100 if n <= 6 else 10):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    assert canonical_code(t.relabel(perm)) == c

    def test_injective_against_networkx(self):
        for n in range(2, 11):
            trees = list(enumerate_trees(n))
            by_code = {}
            for t in trees:
                by_code.setdefault(canonical_code(t), []).append(t)
            assert len(by_code) == len(trees)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_isomorphism_matches_networkx(self, data):
        n = data.draw(st.integers(3, 11))
        s = prufer_tree(data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)), n)
        t = prufer_tree(data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)), n)
        gs, gt = nx.Graph(s.edges()), nx.Graph(t.edges())
        assert is_isomorphic(s, t) == nx.is_isomorphic(gs, gt)


class TestEnumeration:
    def test_counts_against_pruefer_oracle(self):
        for n in range(1, 9):
            oracle = prufer_classes(n)
            ours = list(enumerate_trees(n))
            assert len(ours) == len(oracle) == FREE_TREES[n - 1]
            want = sorted(canonical_code(Tree.from_edges(n, e)) for e in oracle.values())
            assert codes(ours) == want

    def test_counts_to_fourteen(self):
        for n in range(9, 15):
            assert sum(1 for _ in enumerate_trees(n)) == FREE_TREES[n - 1]
        assert sum(1 for _ in enumerate_trees(10)) == 106

    def test_n4(self):
        assert set(codes(enumerate_trees(4))) == {canonical_code(path(4)), canonical_code(star(4))}

    def test_bound(self):
        with pytest.raises(EnumerationBoundError):
            next(enumerate_trees(MAX_ENUM_N + 1))
        assert MAX_ENUM_N >= 18

    def test_partition(self):
        whole = codes(enumerate_trees(9))
        parts = []
        for i in range(3):
            parts += list(enumerate_trees(9, part=(i, 3)))
        assert codes(parts) == whole

    def test_diameter_filter(self):
        for n in range(2, 11):
            by_d = {}
            for t in enumerate_trees(n):
                by_d.setdefault(diameter(t), []).append(t)
            for d in range(0, n + 1):
                assert codes(enumerate_trees_diameter(n, d)) == codes(by_d.get(d, []))
        assert sum(len(list(enumerate_trees_diameter(8, d))) for d in range(2, 8)) == 23

    def test_diameter_extremes(self):
        for n in range(3, 10):
            assert codes(enumerate_trees_diameter(n, n - 1)) == [canonical_code(path(n))]
            assert codes(enumerate_trees_diameter(n, 2)) == [canonical_code(star(n))]
        assert list(enumerate_trees_diameter(5, 7)) == []
        assert list(enumerate_trees_diameter(5, 1)) == []

    def test_path_plus_leaf_family(self):
        for d in range(2, 12):
            assert codes(trees_path_plus_leaf(d)) == codes(enumerate_trees_diameter(d + 2, d))
