"""Compositions, weak compositions and descent-set bijections.

Compositions are tuples of positive integers, weak compositions tuples of
non-negative integers.  "Descent sets" of weak compositions are multisets,
stored as sorted tuples with repetition.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import OutOfRange, SizeMismatch


def comp_of_set(A: Iterable[int], n: int) -> tuple:
    """Successive differences of the sorted multiset A inside {0..n}."""
    a = sorted(A)
    if any(x < 0 or x > n for x in a):
        raise OutOfRange(f"elements of {a} must lie in 0..{n}")
    if n == 0 and not a:
        return ()
    pts = [0] + a + [n]
    return tuple(pts[i + 1] - pts[i] for i in range(len(pts) - 1))


def des_of_comp(L: Sequence[int]) -> tuple:
    """Partial sums of L, total excluded."""
    out, s = [], 0
    for part in tuple(L)[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def comp_of_perm(p: Sequence[int]) -> tuple:
    """Descent composition: lengths of the increasing runs."""
    n = len(p)
    return comp_of_set([i for i in range(1, n) if p[i - 1] > p[i]], n)


def size(L: Sequence[int]) -> int:
    return sum(L)


def refines(L: Sequence[int], M: Sequence[int]) -> bool:
    """True iff M arises from L by merging adjacent parts."""
    if sum(L) != sum(M):
        raise SizeMismatch(f"{tuple(L)} and {tuple(M)} have different sizes")
    have = Counter(des_of_comp(L))
    return all(have[x] >= 1 for x in des_of_comp(M))


def add(J: Sequence[int], K: Sequence[int]) -> tuple:
    if len(J) != len(K):
        raise SizeMismatch(f"{tuple(J)} and {tuple(K)} have different lengths")
    return tuple(a + b for a, b in zip(J, K))


def canonical_perm(L: Sequence[int]) -> tuple:
    """Permutation of [n] with descent composition L.

    Runs receive value intervals from the last run (smallest values) to the
    first (largest), each run increasing.
    """
    L = tuple(L)
    out, top = [], sum(L)
    for part in L:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(out)


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All compositions of n in lexicographic order of their parts."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return tuple(out)


def weak_compositions(n: int, k: int) -> tuple:
    """Weak compositions of n into exactly k parts, lexicographic."""
    if k == 0:
        return ((),) if n == 0 else ()
    out = []
    for bars in combinations(range(n + k - 1), k - 1):
        prev, parts = -1, []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + k - 2 - prev)
        out.append(tuple(parts))
    return tuple(sorted(out))


def length(L: Sequence[int]) -> int:
    return len(L)
