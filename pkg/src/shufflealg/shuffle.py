"""Shuffles of disjoint permutations and the weak-composition bijection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Sequence

from . import comps
from .errors import InvalidBlocks, NotContained, NotDisjoint
from .perm import make
from .stats import StatValue, evaluate, format_value, parse_stat


def _check_disjoint(p, s):
    p, s = make(p), make(s)
    common = set(p) & set(s)
    if common:
        raise NotDisjoint(f"shared letters {sorted(common)}")
    return p, s


def shuffles(p: Sequence[int], s: Sequence[int]) -> list:
    """All shuffles of p and s.

    Ordered by the set of positions taken by p, in lexicographic order of
    the position tuples.
    """
    p, s = _check_disjoint(p, s)
    m, n = len(p), len(s)
    out = []
    for pos in combinations(range(m + n), m):
        tau = [0] * (m + n)
        taken = set(pos)
        for k, i in enumerate(pos):
            tau[i] = p[k]
        it = iter(s)
        for i in range(m + n):
            if i not in taken:
                tau[i] = next(it)
        out.append(tuple(tau))
    return out


@dataclass(frozen=True)
class StatDistribution:
    """Sorted multiset of statistic values over a shuffle set."""

    entries: tuple
    m: int
    n: int
    stat: str = field(default="", compare=False)

    def __post_init__(self):
        assert len(self.entries) == comb(self.m + self.n, self.m)

    def counts(self) -> Counter:
        return Counter(self.entries)

    def __str__(self):
        return "{" + ", ".join(format_value(v) for v in self.entries) + "}"


def distribution(st, p: Sequence[int], s: Sequence[int]) -> StatDistribution:
    st = parse_stat(st)
    vals = sorted(evaluate(st, t) for t in shuffles(p, s))
    return StatDistribution(tuple(vals), len(p), len(s), st.name)


def _blocks(word: Sequence[int], sizes: Sequence[int]) -> list:
    out, i = [], 0
    for k in sizes:
        out.append(tuple(word[i:i + k]))
        i += k
    return out


def _increasing(block) -> bool:
    return all(block[i] < block[i + 1] for i in range(len(block) - 1))


def descent_subset_forward(p, s, J, K, L) -> tuple:
    """Merge the J-blocks of p with the K-blocks of s block by block."""
    p, s = _check_disjoint(p, s)
    J, K, L = tuple(J), tuple(K), tuple(L)
    if not (len(J) == len(K) == len(L)):
        raise InvalidBlocks("J, K and L must have the same number of parts")
    if sum(J) != len(p) or sum(K) != len(s):
        raise InvalidBlocks("J and K must be weak compositions of |p| and |s|")
    if comps.add(J, K) != L or any(x <= 0 for x in L):
        raise InvalidBlocks("J + K must equal the composition L")
    pb, sb = _blocks(p, J), _blocks(s, K)
    if not all(_increasing(b) for b in pb + sb):
        raise InvalidBlocks("J must refine Comp(p) and K must refine Comp(s)")
    tau = []
    for a, b in zip(pb, sb):
        tau.extend(sorted(a + b))
    return tuple(tau)


def descent_subset_backward(p, s, tau, A) -> tuple:
    """Recover (J, K) from a shuffle tau whose descents lie in A."""
    p, s = _check_disjoint(p, s)
    tau = make(tau)
    A = sorted(set(A))
    N = len(tau)
    if sorted(tau) != sorted(p + s):
        raise InvalidBlocks("tau is not a shuffle of p and s")
    if any(a < 1 or a > N - 1 for a in A):
        raise NotContained(f"A must be a subset of [1, {N - 1}]")
    des = {i for i in range(1, N) if tau[i - 1] > tau[i]}
    if not des <= set(A):
        raise NotContained(f"descents {sorted(des)} not contained in {A}")
    pset = set(p)
    J, K = [], []
    for block in _blocks(tau, comps.comp_of_set(A, N)):
        a = sum(1 for x in block if x in pset)
        J.append(a)
        K.append(len(block) - a)
    # tau must actually contain p and s as subsequences
    if tuple(x for x in tau if x in pset) != p or tuple(x for x in tau if x not in pset) != s:
        raise InvalidBlocks("tau is not a shuffle of p and s")
    return tuple(J), tuple(K)


def block_pairs(p, s, A) -> list:
    """All (J, K) satisfying the four conditions for A, by direct enumeration."""
    p, s = _check_disjoint(p, s)
    N = len(p) + len(s)
    L = comps.comp_of_set(sorted(A), N)
    cp, cs = comps.comp_of_perm(p), comps.comp_of_perm(s)
    out = []
    for J in comps.weak_compositions(len(p), len(L)):
        if not comps.refines(J, cp):
            continue
        K = tuple(l - j for l, j in zip(L, J))
        if min(K, default=0) < 0 or not comps.refines(K, cs):
            continue
        out.append((J, K))
    return out


def bijection_check(p, s) -> bool:
    """Counting identity and mutual inverse property for every A."""
    p, s = _check_disjoint(p, s)
    N = len(p) + len(s)
    shuf = shuffles(p, s)
    des = {t: {i for i in range(1, N) if t[i - 1] > t[i]} for t in shuf}
    for r in range(N):
        for A in combinations(range(1, N), r):
            Aset = set(A)
            L = comps.comp_of_set(A, N)
            inside = [t for t in shuf if des[t] <= Aset]
            pairs = block_pairs(p, s, A)
            if len(inside) != len(pairs):
                return False
            images = set()
            for J, K in pairs:
                t = descent_subset_forward(p, s, J, K, L)
                if not des[t] <= Aset or descent_subset_backward(p, s, t, A) != (J, K):
                    return False
                images.add(t)
            if images != set(inside):
                return False
    return True
