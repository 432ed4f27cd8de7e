"""Exact real roots: Sturm chains, k-th largest root isolation, algebraic comparison.

Every eigenvalue inequality in the package is decided here.  Floats appear only
in ``to_float`` style rendering.
"""

from __future__ import annotations

import enum
import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .poly import IntPoly, charpoly, poly_gcd, squarefree_decomposition, squarefree_part
from .trees import Tree

DEFAULT_WIDTH = Fraction(1, 2**40)
DEFAULT_DECIMALS = 10


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.lower()


# ---------------------------------------------------------------- Sturm chains


@lru_cache(maxsize=100_000)
def _chain(coeffs: tuple[int, ...]) -> tuple[IntPoly, ...]:
    p = IntPoly(coeffs)
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2].pseudo_rem(seq[-1])
        if r.is_zero():
            break
        # Negated remainder, scaled by a positive content.
        r = -r
        g = r.content()
        seq.append(IntPoly([a // g for a in r.coeffs]))
    return tuple(q for q in seq if not q.is_zero())


def sturm_chain(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm sequence of the square-free part of ``p``."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    return _chain(squarefree_part(p).coeffs)


def _variations(chain, x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    count = 0
    last = 0
    for q in chain:
        s = q.sign_at(num, den)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _sqf_count(sqf_chain, lo: Fraction, hi: Fraction) -> int:
    return _variations(sqf_chain, lo) - _variations(sqf_chain, hi)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        return 0
    return _sqf_count(sturm_chain(p), lo, hi)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.lead)
    m = max((abs(a) for a in p.coeffs[:-1]), default=0)
    return Fraction(-(-(lead + m) // lead)) + 1


# ---------------------------------------------------------------- algebraic values


class AlgebraicValue:
    """A real algebraic number: the unique root of ``poly`` in (lo, hi].

    ``poly`` is square-free and primitive.  Refinement narrows the interval in
    place; the represented number never changes.
    """

    __slots__ = ("poly", "lo", "hi", "multiplicity", "_chain")

    def __init__(self, poly: IntPoly, lo, hi, multiplicity: int = 1, check: bool = True):
        self.poly = poly.primitive()
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.multiplicity = multiplicity
        self._chain = sturm_chain(self.poly)
        if check:
            if not self.lo < self.hi:
                raise ValueError("isolating interval needs lo < hi")
            if _sqf_count(self._chain, self.lo, self.hi) != 1:
                raise ValueError(f"interval ({self.lo}, {self.hi}] does not isolate one root of {self.poly}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def exact_rational(self) -> Optional[Fraction]:
        """The value itself when it is rational (linear context polynomial)."""
        if self.poly.degree == 1:
            a0, a1 = self.poly.coeffs
            return Fraction(-a0, a1)
        return None

    def simplify(self) -> "AlgebraicValue":
        """Switch to a linear defining polynomial when the value is rational."""
        f = self.poly
        if f.degree <= 1 or abs(f.lead) > 10**6:
            return self
        a0, lead = abs(f.coeffs[0]), abs(f.lead)
        for q in (d for d in range(1, lead + 1) if lead % d == 0):
            while (self.hi - self.lo) * q > 64:
                self.bisect()
            lo_p = math.floor(self.lo * q) + 1
            hi_p = math.floor(self.hi * q)
            for num in range(lo_p, hi_p + 1):
                # rational root test: p | a0 for p/q in lowest terms
                if a0 and num and math.gcd(num, q) == 1 and a0 % abs(num):
                    continue
                x = Fraction(num, q)
                if f.eval(x) == 0:
                    self.poly = IntPoly((-x.numerator, x.denominator))
                    self._chain = sturm_chain(self.poly)
                    self.lo, self.hi = max(self.lo, x - 1), x
                    return self
        return self

    def bisect(self):
        mid = (self.lo + self.hi) / 2
        if _sqf_count(self._chain, self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def refine(self, width) -> "AlgebraicValue":
        width = Fraction(width)
        q = self.exact_rational()
        if q is not None and self.width > width:
            self.lo, self.hi = q - width / 2, q
            return self
        while self.width > width:
            self.bisect()
        return self

    def to_float(self) -> float:
        q = self.exact_rational()
        if q is not None:
            return float(q)
        self.refine(Fraction(1, 2**60))
        return float((self.lo + self.hi) / 2)

    def to_json(self) -> dict:
        return {
            "polynomial": [str(a) for a in self.poly.coeffs],
            "lo": str(self.lo),
            "hi": str(self.hi),
            "multiplicity": self.multiplicity,
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraicValue":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(IntPoly(int(a) for a in data["polynomial"]), Fraction(data["lo"]),
                   Fraction(data["hi"]), int(data.get("multiplicity", 1)))

    def __repr__(self):
        return f"AlgebraicValue({self.poly}, ({self.lo}, {self.hi}], mult={self.multiplicity})"

    # Rich comparisons are exact.
    def __lt__(self, other):
        return compare(self, _as_value(other)) is Ordering.LESS

    def __le__(self, other):
        return compare(self, _as_value(other)) is not Ordering.GREATER

    def __gt__(self, other):
        return compare(self, _as_value(other)) is Ordering.GREATER

    def __ge__(self, other):
        return compare(self, _as_value(other)) is not Ordering.LESS

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicValue, int, Fraction)):
            return NotImplemented
        return compare(self, _as_value(other)) is Ordering.EQUAL

    __hash__ = None


def _as_value(x) -> AlgebraicValue:
    if isinstance(x, AlgebraicValue):
        return x
    return rational_value(Fraction(x))


def rational_value(q) -> AlgebraicValue:
    q = Fraction(q)
    return AlgebraicValue(IntPoly((-q.numerator, q.denominator)), q - 1, q)


def sqrt_value(q) -> AlgebraicValue:
    """The non-negative square root of a rational ``q >= 0``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    if q == 0:
        return rational_value(0)
    return kth_largest_root(IntPoly((-q.numerator, 0, q.denominator)), 1)


class _Factors:
    """Square-free factors of a polynomial with their Sturm chains."""

    def __init__(self, p: IntPoly):
        self.parts = [(f, mult, sturm_chain(f)) for f, mult in squarefree_decomposition(p)]

    def weighted_above(self, x: Fraction) -> int:
        """Real roots strictly greater than x, counted with multiplicity."""
        # Roots above x = V(x) - V(+inf); V(+inf) is the sign pattern of leading coefficients.
        total = 0
        for _, mult, chain in self.parts:
            total += mult * (_variations(chain, x) - _variations_at_inf(chain))
        return total

    def distinct_in(self, lo: Fraction, hi: Fraction) -> list[tuple[IntPoly, int]]:
        out = []
        for f, mult, chain in self.parts:
            c = _sqf_count(chain, lo, hi)
            out.extend([(f, mult)] * c)
        return out


def _variations_at_inf(chain) -> int:
    count = 0
    last = 0
    for q in chain:
        s = 1 if q.lead > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


@lru_cache(maxsize=50_000)
def _factors(coeffs: tuple[int, ...]) -> _Factors:
    return _Factors(IntPoly(coeffs))


def kth_largest_root(p: IntPoly, k: int, width=DEFAULT_WIDTH, bound=None) -> AlgebraicValue:
    """The k-th largest real root of ``p`` counted with multiplicity.

    The result's interval isolates the root on its square-free factor and has
    length at most ``width`` (``width=None`` stops as soon as the root is isolated).
    """
    if p.degree < 1:
        raise ValueError("need a non-constant polynomial")
    facs = _factors(p.primitive().coeffs)
    B = Fraction(bound) if bound is not None else root_bound(p)
    lo, hi = -B, B
    real = facs.weighted_above(lo)
    if not 1 <= k <= real:
        raise ValueError(f"k={k} out of range: polynomial has {real} real roots")
    width = None if width is None else Fraction(width)
    while True:
        inside = facs.distinct_in(lo, hi)
        if len(inside) == 1 and (width is None or hi - lo <= width):
            f, mult = inside[0]
            return AlgebraicValue(f, lo, hi, mult, check=False).simplify()
        mid = (lo + hi) / 2
        if facs.weighted_above(mid) >= k:
            lo = mid
        else:
            hi = mid


def all_roots(p: IntPoly, width=None) -> list[AlgebraicValue]:
    """All real roots in non-increasing order, each repeated by multiplicity."""
    facs = _factors(p.primitive().coeffs)
    n = facs.weighted_above(-root_bound(p))
    return [kth_largest_root(p, k, width) for k in range(1, n + 1)]


# ---------------------------------------------------------------- comparison


def _overlap_equal(a: AlgebraicValue, b: AlgebraicValue) -> bool:
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo >= hi:
        return False
    g = poly_gcd(a.poly, b.poly)
    if g.degree < 1:
        return False
    return _sqf_count(sturm_chain(g), lo, hi) >= 1


def compare(a: AlgebraicValue, b: AlgebraicValue) -> Ordering:
    """Exact ordering of two algebraic values.

    Equality is certified by a common root of the defining polynomials inside
    both isolating intervals; otherwise intervals are bisected until disjoint.
    """
    checked = False
    while True:
        if a.hi <= b.lo:
            return Ordering.LESS
        if b.hi <= a.lo:
            return Ordering.GREATER
        if not checked:
            if _overlap_equal(a, b):
                return Ordering.EQUAL
            checked = True
        if a.width >= b.width:
            a.bisect()
        else:
            b.bisect()


def compare_to_rational_sqrt(a: AlgebraicValue, q) -> Ordering:
    """Order of ``a`` against the non-negative square root of ``q``."""
    return compare(a, sqrt_value(q))


def to_float(a: AlgebraicValue, decimals: int = DEFAULT_DECIMALS) -> str:
    """Decimal rendering, correctly rounded except within 10^-(decimals+3) of a tie."""
    q = a.exact_rational()
    if q is None:
        a.refine(Fraction(1, 10 ** (decimals + 3)))
        q = (a.lo + a.hi) / 2
    scaled = round(q * 10**decimals)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


# ---------------------------------------------------------------- graph eigenvalues


def gershgorin_bound(t: Tree) -> int:
    return 1 + max((t.degree(v) for v in range(t.n)), default=0)


@lru_cache(maxsize=200_000)
def _lambda_cached(t: Tree, k: int, width) -> AlgebraicValue:
    return kth_largest_root(charpoly(t), k, width, bound=gershgorin_bound(t))


def lambda_k(t: Tree, k: int, width=DEFAULT_WIDTH) -> AlgebraicValue:
    """k-th largest adjacency eigenvalue of ``t`` (1-based, with multiplicity)."""
    if not 1 <= k <= t.n:
        raise ValueError(f"k={k} out of range for n={t.n}")
    return _lambda_cached(t, k, None if width is None else Fraction(width))


def lambda1(t: Tree, width=DEFAULT_WIDTH) -> AlgebraicValue:
    return lambda_k(t, 1, width)


def lambda2(t: Tree, width=DEFAULT_WIDTH) -> AlgebraicValue:
    return lambda_k(t, 2, width)


def spectral_radius_poly(p: IntPoly, width=None) -> Optional[AlgebraicValue]:
    """Largest real root of a forest's characteristic polynomial (None for the empty forest)."""
    if p.degree < 1:
        return None
    return kth_largest_root(p, 1, width)
