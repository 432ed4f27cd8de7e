import itertools
import random
from fractions import Fraction

import pytest

from oracles import float_spectrum, random_tree
from treespectra.poly import IntPoly, charpoly, forest_charpoly, path_poly
from treespectra.roots import (
    AlgebraicValue,
    Ordering,
    all_roots,
    compare,
    compare_to_rational_sqrt,
    kth_largest_root,
    lambda1,
    lambda2,
    lambda_k,
    rational_value,
    sqrt_value,
    sturm_count,
    to_float,
)
from treespectra.trees import (
    caterpillar_C,
    caterpillar_T,
    delete_vertices,
    enumerate_trees,
    path,
    star,
)

X = IntPoly.x()


class TestSturm:
    def test_examples(self):
        assert sturm_count(IntPoly((-2, 0, 1)), 0, 2) == 1
        assert sturm_count(path_poly(5), -3, 3) == 5
        assert sturm_count(charpoly(star(5)), 0, 3) == 1

    def test_half_open_interval(self):
        p = (X - 1) * (X - 2)
        assert sturm_count(p, 1, 2) == 1
        assert sturm_count(p, 0, 1) == 1
        assert sturm_count(p, 2, 5) == 0
        assert sturm_count(p, 3, 1) == 0

    def test_repeated_roots_counted_once(self):
        p = (X - 1) ** 3 * (X + 1) ** 2
        assert sturm_count(p, -5, 5) == 2

    def test_paths_below_two(self):
        for n in range(1, 30):
            assert sturm_count(path_poly(n), 2, 3) == 0


class TestKthLargest:
    def test_examples(self):
        v = kth_largest_root(charpoly(star(4)), 2)
        assert v == 0 and v.multiplicity == 2
        r = kth_largest_root(charpoly(path(3)), 1)
        assert Fraction(141421, 100000) < r.lo <= r.hi < Fraction(141422, 100000)

    def test_multiplicity_indexing(self):
        p = (X - 3) * (X - 1) ** 3 * (X + 2)
        vals = [kth_largest_root(p, k) for k in range(1, 6)]
        assert all(v == q for v, q in zip(vals, [3, 1, 1, 1, -2]))
        assert vals[1].multiplicity == 3
        with pytest.raises(ValueError):
            kth_largest_root(p, 6)
        with pytest.raises(ValueError):
            kth_largest_root(p, 0)

    def test_width(self):
        r = kth_largest_root(IntPoly((-2, 0, 1)), 1, width=Fraction(1, 2**60))
        assert r.width <= Fraction(1, 2**60)
        assert r.lo ** 2 < 2 <= r.hi ** 2

    def test_double_star_lambda2_closed_form(self):
        n = 12
        t = caterpillar_T([(n - 2) // 2] * 2)
        assert t.n == n
        closed = kth_largest_root(IntPoly(((n - 2) ** 2, 0, -4 * (n - 1), 0, 4)), 2)
        assert compare(lambda2(t), closed) is Ordering.EQUAL
        assert abs(closed.to_float() - ((11 - 21**0.5) / 2) ** 0.5) < 1e-12

    def test_float_oracle(self):
        rng = random.Random(99)
        for _ in range(500):
            t = random_tree(rng, rng.randint(1, 12))
            ref = float_spectrum(t)
            k = rng.randint(1, t.n)
            assert abs(lambda_k(t, k).to_float() - ref[k - 1]) < 1e-9

    def test_all_roots(self):
        t = caterpillar_C(2, 3, 3)
        roots = all_roots(charpoly(t))
        assert len(roots) == 9
        for a, b in zip(roots, roots[1:]):
            assert a >= b
        ref = float_spectrum(t)
        assert max(abs(r.to_float() - f) for r, f in zip(roots, ref)) < 1e-9


class TestLambda:
    def test_star_lambda2_zero(self):
        for n in range(4, 9):
            assert lambda2(star(n)) == 0

    def test_second_largest_radius_caterpillar(self):
        n = 6
        closed = kth_largest_root(IntPoly((n - 3, 0, -(n - 1), 0, 1)), 1)
        assert compare(lambda1(caterpillar_T([n - 3, 1])), closed) is Ordering.EQUAL

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            lambda_k(path(3), 4)

    def test_lambda2_nonnegative_zero_iff_star(self):
        for n in range(3, 11):
            for t in enumerate_trees(n):
                o = compare(lambda2(t, None), rational_value(0))
                assert o is not Ordering.LESS
                assert (o is Ordering.EQUAL) == (max(t.degree(v) for v in range(n)) == n - 1)


class TestCompare:
    def test_examples(self):
        a = kth_largest_root(IntPoly((-2, 0, 1)), 1)
        b = kth_largest_root(IntPoly((-4, 0, 0, 0, 1)), 1)
        assert compare(a, b) is Ordering.EQUAL
        assert compare(lambda2(caterpillar_C(10, 1, 1)), lambda2(caterpillar_C(9, 2, 1))) is Ordering.EQUAL
        assert compare(lambda1(caterpillar_C(3, 3, 1)), rational_value(2)) is Ordering.EQUAL

    def test_strict(self):
        assert compare(sqrt_value(2), sqrt_value(3)) is Ordering.LESS
        assert compare(sqrt_value(3), rational_value(Fraction(17, 10))) is Ordering.GREATER
        # nearly equal values still separate
        assert compare(sqrt_value(2), rational_value(Fraction(1414213562373095, 10**15))) is Ordering.GREATER

    def test_rational_sqrt(self):
        assert compare_to_rational_sqrt(lambda2(caterpillar_T([4, 0, 4])), 4) is Ordering.EQUAL
        n = 12
        t = caterpillar_T([4, 0, 0, 4])
        assert compare_to_rational_sqrt(lambda2(t), Fraction(n - 3, 2)) is Ordering.GREATER
        assert compare_to_rational_sqrt(lambda1(star(5)), 4) is Ordering.EQUAL

    def test_total_order(self):
        rng = random.Random(7)
        pool = [lambda_k(t, rng.randint(1, t.n), None)
                for t in (random_tree(rng, rng.randint(2, 9)) for _ in range(40))]
        pool += [sqrt_value(q) for q in (2, 3, Fraction(9, 4), 5)] + [rational_value(q) for q in (0, 1, -1, 2, 2, 3)]
        assert len(pool) == 50
        order = {}
        for i, j in itertools.product(range(50), repeat=2):
            order[i, j] = compare(pool[i], pool[j])
        for i, j in order:
            assert order[i, j] == -order[j, i]
        for i, j, k in itertools.product(range(50), repeat=3):
            if order[i, j] is not Ordering.GREATER and order[j, k] is not Ordering.GREATER:
                assert order[i, k] is not Ordering.GREATER

    def test_rich_comparisons(self):
        assert sqrt_value(2) < 2 and sqrt_value(4) == 2 and sqrt_value(2) != 1
        assert sqrt_value(3) >= sqrt_value(3) and sqrt_value(3) > Fraction(3, 2)


class TestValues:
    def test_json_roundtrip(self):
        v = lambda1(caterpillar_C(2, 3, 3))
        w = AlgebraicValue.from_json(v.to_json())
        assert compare(v, w) is Ordering.EQUAL
        assert set(v.to_json()) == {"polynomial", "lo", "hi", "multiplicity"}

    def test_isolation_check(self):
        with pytest.raises(ValueError):
            AlgebraicValue(IntPoly((-2, 0, 1)), -2, 2)
        with pytest.raises(ValueError):
            AlgebraicValue(IntPoly((-2, 0, 1)), 2, 1)

    def test_to_float(self):
        assert to_float(sqrt_value(2), 6) == "1.414214"
        assert to_float(lambda1(path(4)), 6) == "1.618034"
        assert to_float(rational_value(Fraction(-1, 4)), 3) == "-0.250"
        assert to_float(rational_value(3), 0) == "3"
        assert to_float(sqrt_value(2)) == "1.4142135624"


def _forest_spectrum(forest):
    return all_roots(forest_charpoly(forest))


class TestInterlacing:
    def test_vertex_deletion(self):
        for n in range(2, 10):
            for t in enumerate_trees(n):
                full = all_roots(charpoly(t))
                for v in range(n):
                    sub = _forest_spectrum([c for c, _ in delete_vertices(t, [v])])
                    assert len(sub) == n - 1
                    for i in range(n - 1):
                        assert compare(full[i], sub[i]) is not Ordering.LESS
                        assert compare(sub[i], full[i + 1]) is not Ordering.LESS


class TestStronglyDisjoint:
    def test_vertex_deletion_splits(self):
        implications = 0
        for n in range(3, 10):
            for t in enumerate_trees(n):
                l2 = lambda2(t, None)
                for v in range(n):
                    comps = [c for c, _ in delete_vertices(t, [v])]
                    above = [compare(lambda1(c, None), l2) for c in comps]
                    for i, j in itertools.permutations(range(len(comps)), 2):
                        if above[i] is Ordering.GREATER:
                            implications += 1
                            assert above[j] is Ordering.LESS
        assert implications > 0
