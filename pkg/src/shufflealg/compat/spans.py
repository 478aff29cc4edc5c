"""Polynomial-in-p descriptions of the pk and (pk,des) shuffle algebras.

R(p, y) is recovered from the t^p coefficients of the series image at
p = 1..n+1 by interpolation; spans are compared by exact rank over Q.
"""

from __future__ import annotations

import sympy as sp

from .homs import image_series

p_, y_, z_ = sp.symbols("p y z")


def _to_sympy(poly) -> sp.Expr:
    """Poly in (q, y) without q -> sympy expression in y."""
    return sum((sp.Rational(v) * y_ ** b for (a, b), v in poly.c.items()), sp.Integer(0))


def interpolate_R(st: str, value, n: int) -> sp.Expr:
    """The polynomial R(p, y) of degree <= n whose values at p >= 1 are the
    t^p coefficients of the image of the class."""
    ser = image_series(st, value, n, n + 1)
    pts = [(k, _to_sympy(ser[k])) for k in range(1, n + 2)]
    return sp.expand(sp.interpolate(pts, p_))


def pkdes_classes(n: int) -> list:
    return [(j, k) for j in range((n - 1) // 2 + 1) for k in range(j, n - j)]


def _matrix(polys, gens) -> sp.Matrix:
    polys = [sp.Poly(sp.expand(f), *gens) for f in polys]
    monos = sorted({m for f in polys for m in f.monoms()})
    return sp.Matrix([[f.coeff_monomial(m) for m in monos] for f in polys])


def rank(polys, gens=(p_, y_)) -> int:
    if not polys:
        return 0
    return _matrix(polys, gens).rank()


def same_span(a, b, gens=(p_, y_)) -> bool:
    ra, rb, rab = rank(a, gens), rank(b, gens), rank(list(a) + list(b), gens)
    return ra == rb == rab


def pkdes_basis(n: int, form: str = "corrected") -> list:
    """Candidate spanning sets in the variables p, y.

    ``printed`` is p^{n-a}(1+y)^n(1-y)^{a-2b}; ``corrected`` is the image of
    p^{n-a} z^{a-2b} under z = (y-1)/(y+1) after multiplying by (1+y)^n,
    which is p^{n-a}(1+y)^{n-a+2b}(1-y)^{a-2b} up to sign.
    """
    idx = [(a, b) for a in range(n) for b in range(a // 2 + 1)]
    if form == "printed":
        return [p_ ** (n - a) * (1 + y_) ** n * (1 - y_) ** (a - 2 * b) for a, b in idx]
    if form == "corrected":
        return [p_ ** (n - a) * (1 + y_) ** (n - a + 2 * b) * (1 - y_) ** (a - 2 * b)
                for a, b in idx]
    if form == "z":
        return [p_ ** (n - a) * z_ ** (a - 2 * b) for a, b in idx]
    raise ValueError(f"unknown form {form!r}")


def verify_span_pkdes(n: int, form: str = "corrected") -> bool:
    """Span of the R_{n,j,k}(p,y) equals the span of the chosen basis, and the
    common rank is floor((n+1)^2/4)."""
    Rs = [interpolate_R("(pk,des)", v, n) for v in pkdes_classes(n)]
    expected = (n + 1) ** 2 // 4
    if form == "z":
        # Q(p, z) = (1 - z)^n R(p, (1 + z)/(1 - z))
        Qs = [sp.expand(sp.cancel((1 - z_) ** n * R.subs(y_, (1 + z_) / (1 - z_))))
              for R in Rs]
        basis = pkdes_basis(n, "z")
        return rank(Qs, (p_, z_)) == expected and same_span(Qs, basis, (p_, z_))
    basis = pkdes_basis(n, form)
    return rank(Rs) == expected and same_span(Rs, basis)


def pkdes_span_ranks(n: int, form: str) -> tuple:
    """(rank of R's, rank of basis, rank of union) for reporting."""
    Rs = [interpolate_R("(pk,des)", v, n) for v in pkdes_classes(n)]
    basis = pkdes_basis(n, form)
    return rank(Rs), rank(basis), rank(Rs + basis)


def verify_span_pk(n: int) -> bool:
    """Span of the pk polynomials R_{n,j}(p) equals span{p^j : j = n mod 2}."""
    Rs = [interpolate_R("pk", j, n) for j in range((n - 1) // 2 + 1)]
    basis = [p_ ** j for j in range(1, n + 1) if (j - n) % 2 == 0]
    expected = (n + 1) // 2
    return rank(Rs, (p_,)) == expected and same_span(Rs, basis, (p_,))
