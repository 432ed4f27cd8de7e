"""Dense integer polynomials and exact characteristic polynomials of trees.

``IntPoly`` stores arbitrary-precision integer coefficients, constant term
first.  Evaluation takes ``fractions.Fraction`` (or int) points and is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .trees import Tree, RootedTree, delete_vertices


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    # construction helpers
    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPoly":
        return cls((0,) * k + (a,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations
    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else IntPoly()

    def derivative(self) -> "IntPoly":
        return IntPoly([k * a for k, a in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        # Horner on the numerator with a common power of the denominator.
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        for a in reversed(self.coeffs):
            acc = acc * p + a * qpow
            qpow *= q
        # acc = q^deg * f(x); qpow = q^(deg+1)
        return Fraction(acc * q, qpow) if self.coeffs else Fraction(0)

    def sign_at(self, p: int, q: int = 1) -> int:
        """Sign of f(p/q) for q > 0, without building a Fraction."""
        acc = 0
        qpow = 1
        for a in reversed(self.coeffs):
            acc = acc * p + a * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly([a // g for a in self.coeffs])

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Remainder of c * self by other for some positive integer c.

        The multiplier is a power of |lc(other)|, so the result has the same
        sign pattern as the true remainder; Sturm chains rely on that.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lc = b[-1]
        mult = abs(lc)
        sgn = 1 if lc > 0 else -1
        while len(r) - 1 >= db and r:
            top = r[-1] * sgn
            s = len(r) - 1 - db
            r = [a * mult for a in r]
            for i, bi in enumerate(b):
                r[s + i] -= top * bi
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return IntPoly(r)

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.coeffs])

    @classmethod
    def from_json(cls, s: str) -> "IntPoly":
        return cls(int(a) for a in json.loads(s))


def _lift(p) -> IntPoly:
    return IntPoly.const(p) if isinstance(p, int) else p


# ---------------------------------------------------------------- ring helpers


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def poly_scale(p: IntPoly, a: int) -> IntPoly:
    return p * a


def poly_eval(p: IntPoly, x) -> Fraction:
    return p.eval(x)


def poly_derivative(p: IntPoly) -> IntPoly:
    return p.derivative()


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (gcd(0, 0) = 0)."""
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Primitive square-free factors ``f_i`` with ``p ~ prod f_i^i`` (up to a constant).

    Only factors of positive degree are returned.  Every step is a gcd or an
    exact division, so working with primitive parts is harmless.
    """
    p = p.primitive()
    if p.degree <= 0:
        return []
    c = poly_gcd(p, p.derivative())
    w = poly_exact_div_rational(p, c)
    out = []
    i = 1
    while c.degree > 0:
        y = poly_gcd(w, c)
        f = poly_exact_div_rational(w, y)
        if f.degree > 0:
            out.append((f, i))
        w = y
        c = poly_exact_div_rational(c, y)
        i += 1
    if w.degree > 0:
        out.append((w, i))
    return out


def poly_exact_div_rational(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive part of p / q where q divides p over the rationals."""
    r = [Fraction(a) for a in p.coeffs]
    b = q.coeffs
    db = q.degree
    if len(r) - 1 < db:
        if any(r):
            raise ValueError("division is not exact")
        return IntPoly()
    out = [Fraction(0)] * (len(r) - db)
    for s in range(len(r) - 1 - db, -1, -1):
        c = r[s + db] / b[-1]
        out[s] = c
        for i, bi in enumerate(b):
            r[s + i] -= c * bi
    if any(r):
        raise ValueError("division is not exact")
    den = 1
    for c in out:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(int(c * den) for c in out).primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    p = p.primitive()
    if p.degree <= 0:
        return p
    return poly_exact_div_rational(p, poly_gcd(p, p.derivative()))


# ---------------------------------------------------------------- characteristic polynomials


@lru_cache(maxsize=None)
def path_poly(l: int) -> IntPoly:
    """Phi(P_l, x); Phi(P_0) = 1 by convention."""
    if l < 0:
        raise ValueError("path length must be >= 0")
    if l == 0:
        return IntPoly.const(1)
    if l == 1:
        return IntPoly.x()
    return path_poly(l - 1).shift(1) - path_poly(l - 2)


def join_edge_poly(f1: IntPoly, f1a: IntPoly, f2: IntPoly, f2b: IntPoly) -> IntPoly:
    """Phi((G1,a) o (G2,b)) from Phi(G1), Phi(G1-a), Phi(G2), Phi(G2-b)."""
    return f1 * f2 - f1a * f2b


def join_vertex_poly(f1: IntPoly, f1a: IntPoly, f2: IntPoly, f2b: IntPoly) -> IntPoly:
    """Phi((G1,a) o K1 o (G2,b))."""
    return (f1 * f2).shift(1) - f1 * f2b - f1a * f2


def merge_root_poly(f1: IntPoly, f1a: IntPoly, f2: IntPoly, f2b: IntPoly) -> IntPoly:
    """Phi of the graph obtained by identifying roots a and b."""
    return f1a * f2 + f1 * f2b - (f1a * f2b).shift(1)


def _rooted_polys(t: Tree, root: int) -> tuple[IntPoly, IntPoly]:
    """(Phi(T), Phi(T - root)), growing each vertex's subtree one child edge at a time."""
    adj = t.adjacency
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    one = IntPoly.const(1)
    full: dict[int, IntPoly] = {}
    minus: dict[int, IntPoly] = {}
    x = IntPoly.x()
    for v in reversed(order):
        # Start from the single vertex v: Phi = x, Phi(K1 - v) = 1.
        f, fv = x, one
        for w in adj[v]:
            if w == parent[v]:
                continue
            f = join_edge_poly(f, fv, full[w], minus[w])
            fv = fv * full[w]
        full[v], minus[v] = f, fv
    return full[root], minus[root]


@lru_cache(maxsize=200_000)
def charpoly(t: Tree) -> IntPoly:
    """Exact det(xI - A(T))."""
    return _rooted_polys(t, 0)[0]


def rooted_charpolys(rt: RootedTree) -> tuple[IntPoly, IntPoly]:
    """(Phi(G), Phi(G - root)) for a rooted tree."""
    return _rooted_polys(rt.tree, rt.root)


def forest_charpoly(forest: Sequence[Tree]) -> IntPoly:
    out = IntPoly.const(1)
    for t in forest:
        out = out * charpoly(t)
    return out


def charpoly_minus(t: Tree, vs) -> IntPoly:
    """Phi(T - vs) as a product over the components."""
    return forest_charpoly([c for c, _ in delete_vertices(t, vs)])


def caterpillar_poly(l: int, r: int, k: int) -> IntPoly:
    """Closed form for Phi(C(l, r, k))."""
    if min(l, r, k) < 0 or l + r < 1:
        raise ValueError("need l, r, k >= 0 and l + r >= 1")
    if k == 0:
        return path_poly(l + r + 1)
    inner = path_poly(l + r + 1).shift(1) - path_poly(l) * path_poly(r) * k
    return inner.shift(k - 1)


def path_ratio(l: int, x) -> Fraction:
    """Phi(P_{l-1}, x) / Phi(P_l, x) for rational x > 2."""
    x = Fraction(x)
    if l < 1:
        raise ValueError("l must be >= 1")
    if x <= 2:
        raise ValueError("path_ratio needs x > 2")
    return path_poly(l - 1).eval(x) / path_poly(l).eval(x)
