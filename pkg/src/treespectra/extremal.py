"""Extremal trees for lambda_2 (and lambda_1) over trees with given order and diameter.

Closed-form constructions live next to exhaustive searches; a search reports
the full set of trees attaining the optimum, with ties certified exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import graph6
from .center import spectral_center
from .poly import IntPoly
from .roots import (
    AlgebraicValue,
    Ordering,
    compare,
    kth_largest_root,
    lambda1,
    lambda2,
    rational_value,
    sqrt_value,
    to_float,
)
from .smith import is_smith
from .trees import (
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
    path,
    trees_path_plus_leaf,
)

log = logging.getLogger(__name__)

MAX = "max_lambda2"
MIN = "min_lambda2"
MAX_L1 = "max_lambda1"


@dataclass
class MaximizerParams:
    k1: int
    k2: int
    i: Optional[int]  # None when k1 == 0 (position irrelevant)
    j: int


@dataclass
class ExtremalCertificate:
    n: int
    d: Optional[int]
    objective: str
    winners: list[Tree]
    optimum: AlgebraicValue
    search_size: int
    agrees_with_construction: Optional[bool] = None
    notes: dict = field(default_factory=dict)

    @property
    def winner_codes(self) -> list[bytes]:
        return sorted(canonical_code(t) for t in self.winners)

    def to_json(self, decimals: int = 10) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "objective": self.objective,
            "winners": [
                {"graph6": graph6.encode(t), "code": canonical_code(t).decode()}
                for t in sorted(self.winners, key=canonical_code)
            ],
            "optimum": {**self.optimum.to_json(), "decimal": to_float(self.optimum, decimals)},
            "search_size": self.search_size,
            "agrees_with_construction": self.agrees_with_construction,
            **({"notes": self.notes} if self.notes else {}),
        }


# ---------------------------------------------------------------- helpers


def _check_nd(n: int, d: int, dmin: int = 2):
    if not (dmin <= d <= n - 1):
        raise TreeError(f"infeasible (n, d) = ({n}, {d})")


def path_with_leaves(d: int, leaves: dict[int, int]) -> Tree:
    """Path ``0..d`` with ``leaves[i]`` pendant vertices attached at ``i``."""
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for pos in sorted(leaves):
        for _ in range(leaves[pos]):
            edges.append((pos, nxt))
            nxt += 1
    return Tree.from_edges(nxt, edges)


def _dedupe(trees: Iterable[Tree]) -> list[Tree]:
    seen, out = set(), []
    for t in trees:
        c = canonical_code(t)
        if c not in seen:
            seen.add(c)
            out.append(t)
    return out


def extremize(trees: Iterable[Tree], value: Callable[[Tree], AlgebraicValue],
              maximize: bool = True) -> tuple[list[Tree], AlgebraicValue, int]:
    """All trees attaining the exact optimum of ``value``; returns (winners, optimum, count)."""
    scored = [(t, value(t)) for t in trees]
    if not scored:
        raise ValueError("empty search space")
    # Visit the likely optimum first so most comparisons separate quickly.
    scored.sort(key=lambda tv: (tv[1].lo + tv[1].hi) / 2, reverse=maximize)
    want = Ordering.GREATER if maximize else Ordering.LESS
    best_t, best = [scored[0][0]], scored[0][1]
    for t, v in scored[1:]:
        o = compare(v, best)
        if o is want:
            best_t, best = [t], v
        elif o is Ordering.EQUAL:
            best_t.append(t)
    return best_t, best, len(scored)


def _lambda2_coarse(t: Tree) -> AlgebraicValue:
    return lambda2(t, None)


def _lambda1_coarse(t: Tree) -> AlgebraicValue:
    return lambda1(t, None)


# ---------------------------------------------------------------- lambda_1


def lambda1_maximizer(n: int, d: int) -> Tree:
    _check_nd(n, d)
    return caterpillar_C(d // 2, (d + 1) // 2, n - d - 1)


def lambda1_maximizer_bruteforce(n: int, d: int) -> ExtremalCertificate:
    _check_nd(n, d)
    winners, opt, size = extremize(enumerate_trees_diameter(n, d), _lambda1_coarse)
    agree = {canonical_code(t) for t in winners} == {canonical_code(lambda1_maximizer(n, d))}
    return ExtremalCertificate(n, d, MAX_L1, winners, opt, size, agree)


# ---------------------------------------------------------------- lambda_2 maximizers


def boundary_iii_positions(d: int) -> list[int]:
    """Attachment positions j of the single extra leaf when n = d + 2."""
    if d <= 10:
        return [d - 1]
    if d == 11:
        return [d - 1, d - 2]
    if d <= 22:
        return [d - 2]
    if d == 23:
        return [d - 2, d - 3]
    return [d - 3]


def _maximizer_positions(n: int, d: int) -> list[tuple[int, int]]:
    s = n - d - 1
    if s % 2 == 0:
        if d in (3, 4):
            return [(1, d - 1)]
        if d % 2 == 0:
            lo, hi = (d - 2) // 4, -(-(d - 2) // 4)
            return [(i, d - j) for i in sorted({lo, hi}) for j in sorted({lo, hi})]
        i = (d - 1) // 4
        return [(i, d - i)]
    if d in (3, 4):
        return [(1, d - 1)]
    if s >= 5:
        return [((d - 3) // 2, d - 1)]
    i = (d - 3) // 2 if d <= 10 else (d - 4) // 2
    return [(i, d - 1)]


def lambda2_maximizer_construct(n: int, d: int) -> list[tuple[Tree, MaximizerParams]]:
    """Every lambda_2-maximizer over T(n, d) predicted by the closed-form case analysis.

    k1 = floor((n-d-1)/2) leaves go to path vertex i and k2 = ceil(...) to j.
    """
    if n < 4 or not 3 <= d <= n - 2:
        raise TreeError(f"construction needs n >= 4 and 3 <= d <= n-2, got ({n}, {d})")
    s = n - d - 1
    k1, k2 = s // 2, s - s // 2
    out = []
    if s == 1:
        for j in boundary_iii_positions(d):
            out.append((caterpillar_C(d - j, j, 1), MaximizerParams(0, 1, None, j)))
    else:
        for i, j in _maximizer_positions(n, d):
            out.append((path_with_leaves(d, {i: k1, j: k2}), MaximizerParams(k1, k2, i, j)))
    seen, uniq = set(), []
    for t, p in out:
        c = canonical_code(t)
        if c not in seen:
            seen.add(c)
            uniq.append((t, p))
    return uniq


def lambda2_maximizer_bruteforce(n: int, d: int, trees: Optional[Sequence[Tree]] = None) -> ExtremalCertificate:
    _check_nd(n, d, 3)
    pool = list(trees) if trees is not None else list(enumerate_trees_diameter(n, d))
    winners, opt, size = extremize(pool, _lambda2_coarse)
    agree = None
    if n >= 4 and d <= n - 2:
        predicted = {canonical_code(t) for t, _ in lambda2_maximizer_construct(n, d)}
        agree = {canonical_code(t) for t in winners} == predicted
    return ExtremalCertificate(n, d, MAX, winners, opt, size, agree)


# ---------------------------------------------------------------- lambda_2 minimizers


def _legs(t: Tree, c: int) -> list[Optional[int]]:
    """For each component of T - c: its vertex count if it is a path hanging from
    an endpoint, else None."""
    out = []
    for comp, back in delete_vertices(t, [c]):
        attach = [i for i, u in enumerate(back) if c in t.adjacency[u]]
        is_path = all(comp.degree(v) <= 2 for v in range(comp.n))
        if is_path and len(attach) == 1 and comp.degree(attach[0]) <= 1:
            out.append(comp.n)
        else:
            out.append(None)
    return out


def min_structure_root(t: Tree, d: int) -> Optional[int]:
    """The B-root of a minimizer-shaped tree, or None when the shape is wrong.

    Even d: the center carries two legs of d/2 vertices (the diametral path)
    and nothing else on that path branches.  Odd d: the tree is a spider
    centered at one of the two central vertices.
    """
    if diameter(t) != d:
        return None
    cs = center(t)
    if d % 2 == 0:
        c = cs[0]
        legs = _legs(t, c)
        return c if sum(1 for x in legs if x == d // 2) >= 2 else None
    for c in cs:
        if all(t.degree(v) <= 2 for v in range(t.n) if v != c) and t.degree(c) >= 3:
            return c
    return None


def _b_minus_root(t: Tree, d: int, root: int) -> list[Tree]:
    """Components of B - root: T - root without the two diametral legs."""
    comps = delete_vertices(t, [root])
    legs = _legs(t, root)
    want = [d // 2, d // 2] if d % 2 == 0 else [(d - 1) // 2, (d + 1) // 2]
    out = []
    for (comp, _), leg in zip(comps, legs):
        if leg is not None and leg in want:
            want.remove(leg)
            continue
        out.append(comp)
    return out


def verify_min_structure(t: Tree, d: int, lambda2_value: Optional[AlgebraicValue] = None) -> bool:
    """Check the minimizer shape: a single branching vertex at the middle of a
    diametral path, with B - root spectrally below lambda_2 (Smith components
    for even d, a subdivided star for odd d)."""
    root = min_structure_root(t, d)
    if root is None:
        return False
    l2 = lambda2_value if lambda2_value is not None else lambda2(t, None)
    rest = _b_minus_root(t, d, root)
    for comp in rest:
        if compare(lambda1(comp, None), l2) is Ordering.GREATER:
            return False
        if d % 2 == 0 and not is_smith(comp):
            return False
    return True


def lambda2_minimizer_bruteforce(n: int, d: int, trees: Optional[Sequence[Tree]] = None) -> ExtremalCertificate:
    _check_nd(n, d, 3)
    pool = list(trees) if trees is not None else list(enumerate_trees_diameter(n, d))
    winners, opt, size = extremize(pool, _lambda2_coarse, maximize=False)
    agree = all(verify_min_structure(t, d, opt) for t in winners)
    return ExtremalCertificate(n, d, MIN, winners, opt, size, agree)


def min_bounds_hold(d: int, opt: AlgebraicValue) -> bool:
    """Even d: optimum equals lambda_1(P_{d/2}); odd d: strictly between
    lambda_1(P_{(d-1)/2}) and lambda_1(P_{(d+1)/2})."""
    if d % 2 == 0:
        return compare(opt, lambda1(path(d // 2), None)) is Ordering.EQUAL
    low = lambda1(path((d - 1) // 2), None)
    high = lambda1(path((d + 1) // 2), None)
    return compare(low, opt) is Ordering.LESS and compare(opt, high) is Ordering.LESS


def minimizer_smith_ok(t: Tree, d: int) -> bool:
    """Even d: every component of B - root is a Smith tree."""
    root = min_structure_root(t, d)
    if root is None:
        return False
    return all(is_smith(c) for c in _b_minus_root(t, d, root))


# ---------------------------------------------------------------- closed-form values


def cor16_bound(n: int, d: int) -> AlgebraicValue:
    """sqrt(2 + sqrt(((n-d)/2)^2 + 4)): largest root of 4x^4 - 16x^2 - (n-d)^2."""
    if n < d + 1:
        raise ValueError("need n >= d + 1")
    return kth_largest_root(IntPoly((-(n - d) ** 2, 0, -16, 0, 4)), 1)


def prop42_bound(k: int) -> AlgebraicValue:
    """sqrt(sqrt(k^2 + 4) + 2): largest root of x^4 - 4x^2 - k^2."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return kth_largest_root(IntPoly((-k * k, 0, -4, 0, 1)), 1)


def prop29_value(n: int) -> AlgebraicValue:
    """sqrt((n - 1 + sqrt(n^2 - 6n + 13)) / 2): largest root of x^4 - (n-1)x^2 + (n-3)."""
    if n < 4:
        raise ValueError("n must be >= 4")
    return kth_largest_root(IntPoly((n - 3, 0, -(n - 1), 0, 1)), 1)


def double_star_lambda2(n: int) -> AlgebraicValue:
    """sqrt((n - 1 - sqrt(2n - 3)) / 2), the second largest root of
    4x^4 - 4(n-1)x^2 + (n-2)^2 (lambda_2 of the balanced double star)."""
    return kth_largest_root(IntPoly(((n - 2) ** 2, 0, -4 * (n - 1), 0, 4)), 2)


def prop43_check(l_max: int = 6, r_max: int = 6, k_max: int = 4) -> dict:
    """Caterpillars C(l, r, k), l, r >= 1: equal spectral radius above 2 forces equal k."""
    items = []
    for l in range(1, l_max + 1):
        for r in range(1, r_max + 1):
            for k in range(0, k_max + 1):
                t = caterpillar_C(l, r, k)
                items.append(((l, r, k), lambda1(t, None)))
    two = rational_value(2)
    above = [(p, v) for p, v in items if compare(v, two) is Ordering.GREATER]
    violations = []
    pairs = 0
    for a in range(len(above)):
        for b in range(a + 1, len(above)):
            (pa, va), (pb, vb) = above[a], above[b]
            if pa[2] == pb[2]:
                continue
            pairs += 1
            if compare(va, vb) is Ordering.EQUAL:
                violations.append((pa, pb))
    return {"caterpillars": len(items), "above_two": len(above),
            "pairs_with_distinct_k": pairs, "violations": violations}


# ---------------------------------------------------------------- maximizers over all trees


def lambda2_max_trees_global(n: int) -> list[Tree]:
    """The lambda_2-maximizers over all n-vertex trees predicted by the classical result."""
    if n < 4:
        raise ValueError("n must be >= 4")
    shapes = []
    if n % 2:
        m = (n - 3) // 2
        shapes = [[m, 0, m], [m, 0, 0, m - 1], [m - 1, 0, 0, 0, m - 1]]
    else:
        m = (n - 4) // 2
        shapes = [[m, 0, 0, m]]
    out = []
    for s in shapes:
        try:
            out.append(caterpillar_T(s))
        except TreeError:
            continue
    return _dedupe(out)


def lambda2_max_global_bruteforce(n: int) -> ExtremalCertificate:
    winners, opt, size = extremize(enumerate_trees(n), _lambda2_coarse)
    predicted = {canonical_code(t) for t in lambda2_max_trees_global(n)}
    agree = {canonical_code(t) for t in winners} == predicted
    return ExtremalCertificate(n, None, MAX, winners, opt, size, agree)


# ---------------------------------------------------------------- n = d + 2 thresholds


def boundary_iii_row(d: int) -> dict:
    """Exact lambda_2-maximizers among T(d+2, d) = {C(d-r, r, 1)}, reported by r."""
    trees = trees_path_plus_leaf(d)
    winners, opt, size = extremize(trees, _lambda2_coarse)
    rs = sorted(min(_leaf_position(t, d), d - _leaf_position(t, d)) for t in winners)
    expected = sorted({min(j, d - j) for j in boundary_iii_positions(d)})
    tie_equal = None
    if len(winners) > 1:
        tie_equal = all(compare(lambda2(w, None), opt) is Ordering.EQUAL for w in winners)
    return {"d": d, "n": d + 2, "r2": rs, "expected_r2": expected, "agree": rs == expected,
            "tie_certified": tie_equal, "optimum": opt, "search_size": size}


def _leaf_position(t: Tree, d: int) -> int:
    # caterpillar_C(l, r, 1) puts its single extra leaf (label d+1) on vertex l.
    return t.adjacency[d + 1][0]


# ---------------------------------------------------------------- open conjecture on odd-d minimizers


def conjecture66_check(n: int, d: int) -> dict:
    """Test the conjectured shape of odd-diameter lambda_2-minimizers.

    (i) every branch of B hanging from the root has length <= (d-3)/2, and
    (ii) any two such branch lengths differ by at most one.  Failures are data.
    """
    if d < 5 or d % 2 == 0:
        raise ValueError("the conjecture concerns odd d >= 5")
    cert = lambda2_minimizer_bruteforce(n, d)
    rows = []
    for t in cert.winners:
        root = min_structure_root(t, d)
        if root is None:
            rows.append({"graph6": graph6.encode(t), "shape_ok": False, "i": False, "ii": False})
            continue
        lengths = sorted(c.n for c in _b_minus_root(t, d, root))
        cond_i = all(x <= (d - 3) // 2 for x in lengths)
        cond_ii = not lengths or max(lengths) - min(lengths) <= 1
        rows.append({"graph6": graph6.encode(t), "shape_ok": True, "branch_lengths": lengths,
                     "i": cond_i, "ii": cond_ii})
    return {"n": n, "d": d, "minimizers": rows,
            "optimum": to_float(cert.optimum),
            "holds": all(r["i"] and r["ii"] for r in rows)}


# ---------------------------------------------------------------- sweeps


def grid(n_min: int, n_max: int) -> list[tuple[int, int]]:
    return [(n, d) for n in range(n_min, n_max + 1) for d in range(3, n - 1)]


def sweep_cell(n: int, d: int, objective: str) -> dict:
    """One (n, d) cell of a sweep, as plain data (safe to ship between processes)."""
    if objective == "max":
        cert = lambda2_maximizer_bruteforce(n, d)
        bound_ok = compare(cert.optimum, cor16_bound(n, d)) is Ordering.LESS
        ok = bool(cert.agrees_with_construction) and bound_ok
        extra = {"cor16_strict": bound_ok}
    elif objective == "min":
        cert = lambda2_minimizer_bruteforce(n, d)
        bounds = min_bounds_hold(d, cert.optimum)
        smith = d % 2 == 1 or all(minimizer_smith_ok(t, d) for t in cert.winners)
        ok = bool(cert.agrees_with_construction) and bounds and smith
        extra = {"bounds": bounds, "smith": smith}
    else:
        raise ValueError(f"unknown objective {objective!r}")
    return {
        "n": n, "d": d, "objective": objective,
        "optimum_decimal": to_float(cert.optimum),
        "winners": len(cert.winners),
        "search_size": cert.search_size,
        "agree": ok,
        "winner_graph6": [graph6.encode(t) for t in sorted(cert.winners, key=canonical_code)],
        **extra,
    }


def _cell_task(args):
    return sweep_cell(*args)


def sweep(n_max: int, objective: str = "max", jobs: int = 1, n_min: int = 4,
          deadline: Optional[float] = None) -> tuple[list[dict], bool]:
    """Run every cell of the grid; returns (rows in (n, d) order, completed)."""
    import time

    cells = [(n, d, objective) for n, d in grid(n_min, n_max)]
    rows: list[dict] = []
    if jobs <= 1:
        for c in cells:
            if deadline is not None and time.monotonic() > deadline:
                return rows, False
            rows.append(_cell_task(c))
        return rows, True
    from concurrent.futures import ProcessPoolExecutor, as_completed

    done: dict[tuple[int, int], dict] = {}
    complete = True
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {pool.submit(_cell_task, c): c for c in cells}
        try:
            for fut in as_completed(futures, timeout=None if deadline is None
                                    else max(deadline - time.monotonic(), 0)):
                row = fut.result()
                done[(row["n"], row["d"])] = row
        except TimeoutError:
            complete = False
            for f in futures:
                f.cancel()
    rows = [done[(n, d)] for n, d, _ in cells if (n, d) in done]
    return rows, complete and len(rows) == len(cells)
