"""Degree-n QSym and Sym arithmetic in composition-indexed bases.

A :class:`CompVector` maps compositions to exact rationals.  The same type
stores F-basis elements of QSym_n and r-, h- or M-basis coordinates; the
basis is implied by the function that produced it.  Sym products are
carried out in the h-basis, where h_J h_K = h_{JK}.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Mapping

from . import comps
from .shuffle import shuffles


def _clean(d: Mapping) -> dict:
    out = {}
    for k, v in d.items():
        if v:
            v = Fraction(v)
            out[k] = v.numerator if v.denominator == 1 else v
    return out


class CompVector:
    """Sparse vector keyed by compositions (or tuples of them)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self.coeffs = _clean(coeffs or {})

    @classmethod
    def basis(cls, key) -> "CompVector":
        return cls({tuple(key) if not key or isinstance(key[0], int) else key: 1})

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def __add__(self, other: "CompVector") -> "CompVector":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return CompVector(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "CompVector":
        return CompVector({k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, CompVector) and self.coeffs == other.coeffs

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.coeffs.items()))


def _subsets_between(lo: Iterable[int], hi: Iterable[int]):
    """Sets S with lo <= S <= hi, as sorted tuples."""
    lo, extra = set(lo), sorted(set(hi) - set(lo))
    for r in range(len(extra) + 1):
        for add in combinations(extra, r):
            yield tuple(sorted(lo | set(add)))


def _comp(des, n):
    return comps.comp_of_set(des, n)


# --- QSym ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _fprod(J: tuple, K: tuple) -> tuple:
    m = sum(J)
    p = comps.canonical_perm(J)
    s = tuple(x + m for x in comps.canonical_perm(K))
    tally = defaultdict(int)
    for t in shuffles(p, s):
        tally[comps.comp_of_perm(t)] += 1
    return tuple(sorted(tally.items()))


def fundamental_product(J, K) -> CompVector:
    """F_J F_K in the F-basis, counted from shuffles of representatives."""
    return CompVector(dict(_fprod(tuple(J), tuple(K))))


def product_f(a: CompVector, b: CompVector) -> CompVector:
    out = CompVector()
    for J, u in a:
        for K, v in b:
            out = out + fundamental_product(J, K).scale(u * v)
    return out


def f_to_m(L) -> CompVector:
    """F_L = sum of M_K over Des(K) containing Des(L)."""
    L = tuple(L)
    n = sum(L)
    return CompVector({_comp(S, n): 1
                       for S in _subsets_between(comps.des_of_comp(L), range(1, n))})


def m_to_f(K) -> CompVector:
    """Inverse of f_to_m by inclusion-exclusion."""
    K = tuple(K)
    n, base = sum(K), comps.des_of_comp(K)
    return CompVector({_comp(S, n): (-1) ** (len(S) - len(base))
                       for S in _subsets_between(base, range(1, n))})


def change_basis(vec: CompVector, fn) -> CompVector:
    out = CompVector()
    for k, v in vec:
        out = out + fn(k).scale(v)
    return out


# --- Sym -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _h_in_r(L: tuple) -> CompVector:
    n = sum(L)
    return CompVector({_comp(S, n): 1 for S in _subsets_between((), comps.des_of_comp(L))})


@lru_cache(maxsize=None)
def _r_in_h(L: tuple) -> CompVector:
    n, top = sum(L), comps.des_of_comp(L)
    return CompVector({_comp(S, n): (-1) ** (len(top) - len(S))
                       for S in _subsets_between((), top)})


def h_in_ribbon(L) -> CompVector:
    """h_L as a sum of ribbons r_K with Des(K) inside Des(L)."""
    return _h_in_r(tuple(L))


def ribbon_in_h(L) -> CompVector:
    """r_L in the h-basis, signs (-1)^{l(L)-l(K)}."""
    return _r_in_h(tuple(L))


def h_to_r(vec: CompVector) -> CompVector:
    return change_basis(vec, h_in_ribbon)


def r_to_h(vec: CompVector) -> CompVector:
    return change_basis(vec, ribbon_in_h)


def strip_zeros(L) -> tuple:
    return tuple(x for x in L if x)


def h_product(a: CompVector, b: CompVector) -> CompVector:
    """Product of two h-basis vectors (concatenation of indices)."""
    out = defaultdict(Fraction)
    for J, u in a:
        for K, v in b:
            out[J + K] += u * v
    return CompVector(out)


def h_coproduct(L) -> CompVector:
    """Delta h_L, summing over weak splittings J + K = L; keys are (J, K)."""
    out = defaultdict(int)
    for J in product(*[range(x + 1) for x in L]):
        K = tuple(x - j for x, j in zip(L, J))
        out[(strip_zeros(J), strip_zeros(K))] += 1
    return CompVector(out)


def _tensor_map(vec: CompVector, left, right) -> CompVector:
    out = defaultdict(Fraction)
    for (A, B), c in vec:
        for A2, a in left(A):
            for B2, b in right(B):
                out[(A2, B2)] += c * a * b
    return CompVector(out)


@lru_cache(maxsize=None)
def _rcop(L: tuple) -> CompVector:
    hvec = CompVector()
    for K, c in ribbon_in_h(L):
        hvec = hvec + h_coproduct(K).scale(c)
    return _tensor_map(hvec, h_in_ribbon, h_in_ribbon)


def ribbon_coproduct(L) -> CompVector:
    """Delta r_L in the basis r_J (x) r_K; keys are (J, K)."""
    return _rcop(tuple(L))


def coproduct_r(vec: CompVector) -> CompVector:
    out = CompVector()
    for L, c in vec:
        out = out + ribbon_coproduct(L).scale(c)
    return out


def duality_check(n: int) -> bool:
    """Coefficient of r_J (x) r_K in Delta r_L equals that of F_L in F_J F_K."""
    for L in comps.compositions_of(n):
        cop = ribbon_coproduct(L)
        for i in range(n + 1):
            for J in comps.compositions_of(i):
                for K in comps.compositions_of(n - i):
                    if cop[(J, K)] != fundamental_product(J, K)[L]:
                        return False
    return True


def e_in_ribbon(n: int) -> CompVector:
    return CompVector({(1,) * n: 1})


def e_in_h(n: int) -> CompVector:
    return ribbon_in_h((1,) * n)


def h_e_reciprocity(n: int) -> bool:
    """sum over i+j=n of (-1)^i h_i e_j vanishes for n >= 1 and is 1 for n = 0."""
    total = CompVector()
    for i in range(n + 1):
        hi = CompVector({strip_zeros((i,)): (-1) ** i})
        total = total + h_product(hi, e_in_h(n - i))
    expected = CompVector({(): 1}) if n == 0 else CompVector()
    return h_to_r(total) == expected


def e_monoidlike(n: int) -> bool:
    """Delta e_n = sum over i+j=n of e_i (x) e_j."""
    expected = CompVector({((1,) * i, (1,) * (n - i)): 1 for i in range(n + 1)})
    return ribbon_coproduct((1,) * n) == expected


def h_monoidlike(n: int) -> bool:
    expected = CompVector({(strip_zeros((i,)), strip_zeros((n - i,))): 1
                           for i in range(n + 1)})
    return h_coproduct((n,)) == expected


def coassociativity(L) -> bool:
    cop = ribbon_coproduct(L)
    left, right = defaultdict(Fraction), defaultdict(Fraction)
    for (A, B), c in cop:
        for (A1, A2), a in ribbon_coproduct(A):
            left[(A1, A2, B)] += c * a
        for (B1, B2), b in ribbon_coproduct(B):
            right[(A, B1, B2)] += c * b
    return CompVector(left) == CompVector(right)


def associativity(I, J, K) -> bool:
    a = product_f(fundamental_product(I, J), CompVector.basis(tuple(K)))
    b = product_f(CompVector.basis(tuple(I)), fundamental_product(J, K))
    return a == b


def f_product_row_sum_ok(J, K) -> bool:
    total = sum(v for _, v in fundamental_product(J, K))
    return total == comb(sum(J) + sum(K), sum(J))
