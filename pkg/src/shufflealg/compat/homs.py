"""Closed-form images of shuffle-algebra bases and homomorphism checks.

Images are functions of the class value and the size n.  The factor x^n
only records the grading and is dropped; all comparisons are made inside
one degree.  Series images are t-series whose product is the Hadamard
product, so evaluating at the point p means taking the t^p coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..comps import canonical_perm
from ..errors import Unsupported
from ..qseries import ONE, ZERO, Poly, TSeries, q_factorial, qbinom
from ..stats import evaluate, parse_stat
from .classes import structure_constants

CHARACTERIZED = ("maj", "des", "(des,comaj)", "pk", "lpk", "(pk,des)",
                 "(lpk,des)", "udr", "(udr,des)")
SERIES_STATS = ("des", "(des,comaj)", "pk", "lpk", "(pk,des)", "(lpk,des)",
                "udr", "(udr,des)")

Y = Poly.y()


class QFraction:
    """num/den with equality decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num, self.den = Poly.lift(num), Poly.lift(den)

    def __mul__(self, other: "QFraction") -> "QFraction":
        return QFraction(self.num * other.num, self.den * other.den)

    def __add__(self, other: "QFraction") -> "QFraction":
        return QFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def scale(self, c) -> "QFraction":
        return QFraction(self.num * c, self.den)

    def __eq__(self, other):
        return isinstance(other, QFraction) and self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def _lin(a, b, P) -> TSeries:
    """a + b t as a series."""
    return TSeries.from_poly([Poly.lift(a), Poly.lift(b)], P)


def _tpoly(coeffs, P) -> TSeries:
    return TSeries.from_poly([Poly.lift(c) for c in coeffs], P)


def _pow(s: TSeries, e: int) -> TSeries:
    if e < 0:
        raise ValueError("negative exponent in a closed form")
    return s.pow(e)


def _over_one_minus_t(num: TSeries, e: int) -> TSeries:
    return num.mul(_lin(1, -1, num.P).pow(e).inverse())


def image_series(st, value, n: int, P: int) -> TSeries:
    """Series image of the class with the given value among n-permutations."""
    name = parse_stat(st).name
    if n == 0:
        return TSeries.geometric(P)
    if name == "des":
        return _over_one_minus_t(TSeries.t_power(value + 1, P), n + 1)
    if name == "(des,comaj)":
        d, c = value
        den = TSeries([ONE], P)
        for i in range(n + 1):
            den = den.mul(_lin(1, -Poly.q(i), P))
        return TSeries.t_power(d + 1, P).scale(Poly.q(c)).mul(den.inverse())
    if name == "pk":
        j = value
        num = _pow(_lin(1, 1, P), n - 2 * j - 1).shift(j + 1).scale(2 ** (2 * j + 1))
        return _over_one_minus_t(num, n + 1)
    if name == "lpk":
        j = value
        num = _pow(_lin(1, 1, P), n - 2 * j).shift(j).scale(2 ** (2 * j))
        return _over_one_minus_t(num, n + 1)
    if name == "(pk,des)":
        j, k = value
        num = (_pow(_lin(Y, 1, P), k - j).mul(_pow(_lin(1, Y, P), n - j - k - 1))
               .shift(j + 1).scale((1 + Y) ** (2 * j + 1)))
        return _over_one_minus_t(num, n + 1)
    if name == "(lpk,des)":
        j, k = value
        num = (_pow(_lin(Y, 1, P), k - j).mul(_pow(_lin(1, Y, P), n - j - k))
               .shift(j).scale((1 + Y) ** (2 * j)))
        return _over_one_minus_t(num, n + 1)
    if name == "(udr,des)":
        u, d = value
        return udr_des_numerator(u, d, n, P).mul(udr_denominator(n, P).inverse())
    if name == "udr":
        u = value
        num = _pow(_tpoly([1, 0, 1], P), n - u).shift(u).scale(2 ** (u - 1))
        den = _lin(1, -1, P).pow(2).mul(_tpoly([1, 0, -1], P).pow(n - 1))
        return num.mul(den.inverse())
    raise Unsupported(f"no closed-form series image for {name}")


def udr_denominator(n: int, P: int) -> TSeries:
    """(1 - t)(1 - t^2)^n."""
    return _lin(1, -1, P).mul(_tpoly([1, 0, -1], P).pow(n))


def udr_des_numerator(u: int, d: int, n: int, P: int) -> TSeries:
    """N for udr = u, des = d, size n, with the floor/ceiling split."""
    fl, ce = u // 2, (u + 1) // 2
    out = _pow(_tpoly([1, 0, Y], P), n - d - ce)
    out = out.mul(_pow(_tpoly([Y, 0, 1], P), d - fl))
    out = out.mul(_pow(_lin(1, Y, P), ce - fl))
    out = out.mul(_pow(_lin(Y, 1, P), 1 - ce + fl))
    return out.shift(u).scale((1 + Y) ** (u - 1))


def image_point(st, value, n: int, p: int):
    """Point value at p of the image (a Poly in q and y)."""
    name = parse_stat(st).name
    if n == 0:
        return ONE
    if name == "des":
        top = p - value + n - 1
        return Poly.const(comb(top, n) if top >= 0 else 0)
    if name == "(des,comaj)":
        d, c = value
        return Poly.q(c) * qbinom(p - d + n - 1, n)
    return image_series(st, value, n, p)[p]


def image_maj(value: int, n: int) -> QFraction:
    """q^maj / [n]_q!."""
    return QFraction(Poly.q(value), q_factorial(n))


def phi_eval(st, L, mode: str = "series", P: int | None = None, p: int | None = None):
    """Image of [pi] for any pi with descent composition L.

    ``mode`` is "series" (needs P), "point" (needs p) or, for maj, "fraction".
    """
    st = parse_stat(st)
    if st.name not in CHARACTERIZED:
        raise Unsupported(f"{st.name} has no characterized shuffle algebra here")
    L = tuple(L)
    n = sum(L)
    value = evaluate(st, canonical_perm(L))
    if st.name == "maj":
        return image_maj(value, n)
    if mode == "point":
        if p is None:
            raise ValueError("point mode needs p")
        return image_point(st, value, n, p)
    if P is None:
        raise ValueError("series mode needs P")
    return image_series(st, value, n, P)


def verify_homomorphism(st, m: int, n: int, P: int | None = None,
                        mode: str = "point") -> bool:
    """phi(beta) phi(gamma) == sum_alpha c^alpha phi(alpha) for every class pair.

    Point mode evaluates at p = 0..m+n+1; series mode compares t-series to
    order P (default m+n+2) under the Hadamard product.  maj is checked as
    an identity of fractions with the ordinary product.
    """
    st = parse_stat(st)
    if st.name not in CHARACTERIZED:
        raise Unsupported(f"{st.name} has no characterized shuffle algebra here")
    sc = structure_constants(st, m, n)
    L, R, T = sc.left, sc.right, sc.target
    if st.name == "maj":
        for b, (vb, _) in enumerate(L.classes):
            for g, (vg, _) in enumerate(R.classes):
                lhs = image_maj(vb, m) * image_maj(vg, n)
                rhs = QFraction(ZERO, ONE)
                for a, c in sc.product(b, g).items():
                    rhs = rhs + image_maj(T.classes[a][0], m + n).scale(c)
                if lhs != rhs:
                    return False
        return True
    if mode == "point":
        for p in range(0, m + n + 2):
            for b, (vb, _) in enumerate(L.classes):
                fb = image_point(st, vb, m, p)
                for g, (vg, _) in enumerate(R.classes):
                    lhs = fb * image_point(st, vg, n, p)
                    rhs = ZERO
                    for a, c in sc.product(b, g).items():
                        rhs = rhs + image_point(st, T.classes[a][0], m + n, p) * c
                    if lhs != rhs:
                        return False
        return True
    P = m + n + 2 if P is None else P
    for b, (vb, _) in enumerate(L.classes):
        fb = image_series(st, vb, m, P)
        for g, (vg, _) in enumerate(R.classes):
            lhs = fb.hadamard(image_series(st, vg, n, P))
            rhs = TSeries([ZERO], P)
            for a, c in sc.product(b, g).items():
                rhs = rhs + image_series(st, T.classes[a][0], m + n, P).scale(c)
            if lhs != rhs:
                return False
    return True
