"""Exact polynomials in q and y, q-binomials, and truncated t-series.

``Poly`` keys are exponent pairs ``(deg_q, deg_y)``; coefficients are ints or
``Fraction``.  ``TSeries`` holds ``Poly`` coefficients of t^0..t^P.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SizeMismatch


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for k, v in dict(coeffs).items():
                if v:
                    self.c[tuple(k)] = _norm(v)

    # constructors
    @classmethod
    def const(cls, a) -> "Poly":
        return cls({(0, 0): a})

    @classmethod
    def q(cls, k: int = 1) -> "Poly":
        return cls({(k, 0): 1})

    @classmethod
    def y(cls, k: int = 1) -> "Poly":
        return cls({(0, k): 1})

    @classmethod
    def from_q_list(cls, coeffs: Sequence) -> "Poly":
        return cls({(i, 0): a for i, a in enumerate(coeffs)})

    @classmethod
    def lift(cls, x) -> "Poly":
        return x if isinstance(x, Poly) else cls.const(x)

    # arithmetic
    def __add__(self, other):
        other = Poly.lift(other)
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-Poly.lift(other))

    def __rsub__(self, other):
        return Poly.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({k: v * other for k, v in self.c.items()})
        out = {}
        for (a, b), u in self.c.items():
            for (c, d), v in other.c.items():
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + u * v
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def constant(self):
        """The coefficient of q^0 y^0 if the polynomial is constant, else None."""
        if not self.c:
            return 0
        if set(self.c) == {(0, 0)}:
            return self.c[(0, 0)]
        return None

    def degree_q(self) -> int:
        return max((k[0] for k in self.c), default=-1)

    def q_list(self) -> list:
        """Coefficient list in q; requires no y."""
        if any(k[1] for k in self.c):
            raise ValueError("polynomial involves y")
        out = [0] * (self.degree_q() + 1)
        for (a, _), v in self.c.items():
            out[a] = v
        return out

    def subs_y(self, y) -> "Poly":
        out = {}
        for (a, b), v in self.c.items():
            out[(a, 0)] = out.get((a, 0), 0) + v * (Fraction(y) ** b)
        return Poly(out)

    def at(self, q, y=0):
        return _norm(sum(Fraction(v) * Fraction(q) ** a * Fraction(y) ** b
                         for (a, b), v in self.c.items()))

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for (a, b) in sorted(self.c):
            v = self.c[(a, b)]
            mono = "".join(
                ("" if e == 0 else (s if e == 1 else f"{s}^{e}"))
                for s, e in (("q", a), ("y", b)))
            if mono and v == 1:
                terms.append(mono)
            elif mono and v == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


ONE = Poly.const(1)
ZERO = Poly()


def divide_q(num: Poly, den: Poly) -> Poly:
    """Exact division of univariate q-polynomials; raises if not exact."""
    a, b = [Fraction(x) for x in num.q_list()], [Fraction(x) for x in den.q_list()]
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        quot[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return Poly.from_q_list(quot)


@lru_cache(maxsize=None)
def q_int(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    return Poly.from_q_list([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Poly:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> Poly:
    """Gaussian binomial, computed by dividing q-factorials."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return divide_q(q_factorial(n), q_factorial(k) * q_factorial(n - k))


# --- Stanley's shuffling theorem -----------------------------------------


def _maj(t):
    return sum(i for i in range(1, len(t)) if t[i - 1] > t[i])


def _des(t):
    return sum(1 for i in range(1, len(t)) if t[i - 1] > t[i])


def stanley_lhs(p, s, k: int) -> Poly:
    """Sum of q^maj over shuffles of p and s with exactly k descents."""
    from .shuffle import shuffles

    out = {}
    for t in shuffles(p, s):
        if _des(t) == k:
            key = (_maj(t), 0)
            out[key] = out.get(key, 0) + 1
    return Poly(out)


def stanley_rhs(p, s, k: int) -> Poly:
    """Product formula in terms of maj and des of p and s."""
    from .shuffle import _check_disjoint

    p, s = _check_disjoint(p, s)
    m, n = len(p), len(s)
    dp, ds = _des(p), _des(s)
    a = qbinom(m - dp + ds, k - dp)
    b = qbinom(n - ds + dp, k - ds)
    if a.is_zero() or b.is_zero():
        return ZERO
    return Poly.q(_maj(p) + _maj(s) + (k - dp) * (k - ds)) * a * b


def maj_shuffle_identity(p, s) -> tuple:
    """(sum of q^maj over all shuffles, q^{maj p + maj s} [m+n choose m]_q)."""
    from .shuffle import _check_disjoint, shuffles

    p, s = _check_disjoint(p, s)
    lhs = {}
    for t in shuffles(p, s):
        key = (_maj(t), 0)
        lhs[key] = lhs.get(key, 0) + 1
    rhs = Poly.q(_maj(p) + _maj(s)) * qbinom(len(p) + len(s), len(p))
    return Poly(lhs), rhs


# --- truncated t-series ---------------------------------------------------


class TSeries:
    """Power series in t truncated after t^P, with Poly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, P: int | None = None):
        cs = [Poly.lift(c) for c in coeffs]
        if P is not None:
            cs = (cs + [ZERO] * (P + 1))[:P + 1]
        if not cs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self.coeffs = cs

    @property
    def P(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_poly(cls, coeffs: Sequence, P: int) -> "TSeries":
        """Series of a polynomial in t given by its coefficient list."""
        return cls(list(coeffs), P)

    @classmethod
    def geometric(cls, P: int) -> "TSeries":
        """1/(1-t)."""
        return cls([ONE] * (P + 1))

    @classmethod
    def t_power(cls, k: int, P: int) -> "TSeries":
        return cls([ZERO] * k + [ONE], P)

    def _check(self, other):
        if not isinstance(other, TSeries):
            raise TypeError("expected a TSeries")
        if other.P != self.P:
            raise SizeMismatch(f"truncation orders differ: {self.P} vs {other.P}")

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other):
        self._check(other)
        return TSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TSeries([-a for a in self.coeffs])

    def scale(self, c) -> "TSeries":
        return TSeries([a * c for a in self.coeffs])

    def mul(self, other: "TSeries") -> "TSeries":
        """Cauchy product, truncated."""
        self._check(other)
        P = self.P
        out = [ZERO] * (P + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(P + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(out)

    __mul__ = mul

    def hadamard(self, other: "TSeries") -> "TSeries":
        """Coefficientwise product."""
        self._check(other)
        return TSeries([a * b for a, b in zip(self.coeffs, other.coeffs)])

    def pow(self, e: int) -> "TSeries":
        out = TSeries([ONE], self.P)
        for _ in range(e):
            out = out.mul(self)
        return out

    def shift(self, k: int) -> "TSeries":
        """Multiply by t^k."""
        return TSeries([ZERO] * k + self.coeffs, self.P)

    def geom_inverse(self) -> "TSeries":
        """(1 - t f)^{-1} = sum of t^k f^k, truncated."""
        out, term = TSeries([ONE], self.P), TSeries([ONE], self.P)
        for _ in range(self.P):
            term = term.mul(self).shift(1)
            out = out + term
        return out

    def inverse(self) -> "TSeries":
        """Multiplicative inverse; the t^0 coefficient must be a nonzero scalar."""
        c0 = self.coeffs[0].constant()
        if c0 is None or c0 == 0:
            raise ZeroDivisionError("t^0 coefficient is not an invertible scalar")
        inv0 = Fraction(1) / Fraction(c0)
        out = [Poly.const(inv0)]
        for k in range(1, self.P + 1):
            acc = ZERO
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(acc * (-inv0))
        return TSeries(out)

    def __eq__(self, other):
        return isinstance(other, TSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return "TSeries(" + ", ".join(repr(c) for c in self.coeffs) + ")"
