"""Noncommutative generating-function identities, checked degree by degree.

Elements of Sym truncated at degree n are dicts {h-index: TSeries}; the
degree is the size of the index.  Here t is an ordinary formal variable:
(1 - t f)^{-1} means the sum of t^k f^k.
"""

from __future__ import annotations

from ..comps import compositions_of, des_of_comp
from ..nsym import e_in_h, strip_zeros
from ..qseries import ONE, ZERO, Poly, TSeries
from ..stats import evaluate, parse_stat
from ..comps import canonical_perm
from .homs import image_series

KINDS = ("des-gf", "pkdes-gf", "lpkdes-gf", "udrdes-gf")
_STAT = {"des-gf": "des", "pkdes-gf": "(pk,des)", "lpkdes-gf": "(lpk,des)",
         "udrdes-gf": "(udr,des)"}


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return out


def _scale_t(a: dict, k: int) -> dict:
    return {K: v.shift(k) for K, v in a.items()}


def _mul(a: dict, b: dict, n: int) -> dict:
    out = {}
    for J, u in a.items():
        for K, v in b.items():
            if sum(J) + sum(K) > n:
                continue
            key = J + K
            w = u.mul(v)
            out[key] = out[key] + w if key in out else w
    return out


def h_series(n: int, P: int) -> dict:
    """h(x) up to degree n."""
    return {strip_zeros((k,)): TSeries([ONE], P) for k in range(n + 1)}


def e_series(n: int, P: int, y=True) -> dict:
    """e(xy) (or e(x) when y is False) up to degree n, in the h-basis."""
    out = {}
    for k in range(n + 1):
        w = Poly.y(k) if y else ONE
        for K, c in e_in_h(k):
            term = TSeries([w * c], P)
            out[K] = out[K] + term if K in out else term
    return out


def geom_inverse(f: dict, n: int, P: int, step: int = 1) -> dict:
    """(1 - t^step f)^{-1} truncated at degree n and t^P."""
    one = {(): TSeries([ONE], P)}
    out, term = dict(one), dict(one)
    for _ in range(P // step):
        term = _scale_t(_mul(term, f, n), step)
        out = _add(out, term)
    return out


def generating_function(kind: str, n: int, P: int) -> dict:
    h, e = h_series(n, P), e_series(n, P)
    if kind == "des-gf":
        return geom_inverse(h, n, P)
    if kind == "pkdes-gf":
        return geom_inverse(_mul(e, h, n), n, P)
    if kind == "lpkdes-gf":
        return _mul(h, geom_inverse(_mul(e, h, n), n, P), n)
    if kind == "udrdes-gf":
        one_th = _add({(): TSeries([ONE], P)}, _scale_t(h, 1))
        return _mul(geom_inverse(_mul(h, e, n), n, P, step=2), one_th, n)
    raise ValueError(f"unknown generating function {kind!r}")


def ribbon_coefficients(gf: dict, n: int, P: int) -> dict:
    """Coefficient of each r_L (L a composition of n) in the degree-n part."""
    out = {L: TSeries([ZERO], P) for L in compositions_of(n)}
    for K, c in gf.items():
        if sum(K) != n:
            continue
        top = set(des_of_comp(K))
        for L in compositions_of(n):
            if set(des_of_comp(L)) <= top:
                out[L] = out[L] + c
    return out


def closed_form(kind: str, L, P: int) -> TSeries:
    st = parse_stat(_STAT[kind])
    L = tuple(L)
    return image_series(st, evaluate(st, canonical_perm(L)), sum(L), P)


def verify_gf_identity(kind: str, n: int, P: int) -> bool:
    """Every r_L coefficient of the x^n part matches its closed form, and the
    closed forms resum to the total coefficient."""
    if kind not in KINDS:
        raise ValueError(f"unknown generating function {kind!r}")
    gf = generating_function(kind, n, P)
    coeffs = ribbon_coefficients(gf, n, P)
    total = TSeries([ZERO], P)
    for L, c in coeffs.items():
        cf = closed_form(kind, L, P)
        if c != cf:
            return False
        total = total + cf
    # resummation: h_K contributes 2^{l(K)-1} ribbons
    direct = TSeries([ZERO], P)
    for K, c in gf.items():
        if sum(K) == n:
            direct = direct + c.scale(2 ** (len(K) - 1))
    return direct == total
