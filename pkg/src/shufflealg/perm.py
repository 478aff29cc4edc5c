"""Permutations as tuples of distinct positive integers.

A permutation of length n is any tuple of n distinct positive integers; it
need not use the letters 1..n.  Statistics are evaluated via the relative
order only, so every function here is invariant under standardization.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import InvalidPermutation

Permutation = tuple  # tuple[int, ...]; alias kept for annotations


def make(letters: Iterable[int]) -> tuple:
    """Validate and return `letters` as a permutation tuple."""
    p = tuple(int(x) for x in letters)
    if any(x < 1 for x in p):
        raise InvalidPermutation(f"letters must be positive integers: {p}")
    if len(set(p)) != len(p):
        raise InvalidPermutation(f"letters must be distinct: {p}")
    return p


def parse(text: str) -> tuple:
    """Parse "47381", "4 7 3 8 1" or "4,7,3,8,1".

    The undelimited form is read digit by digit, so it only covers letters 1-9.
    """
    s = text.strip()
    if not s:
        return ()
    if re.search(r"[\s,]", s):
        tokens = [t for t in re.split(r"[\s,]+", s) if t]
    else:
        tokens = list(s)
    if not all(t.isdigit() for t in tokens):
        raise InvalidPermutation(f"cannot parse permutation {text!r}")
    return make(int(t) for t in tokens)


def to_str(p: Sequence[int]) -> str:
    if all(x < 10 for x in p):
        return "".join(map(str, p))
    return ",".join(map(str, p))


def standardize(word: Sequence[int]) -> tuple:
    """Replace the i-th smallest letter by i."""
    w = make(word)
    rank = {v: i + 1 for i, v in enumerate(sorted(w))}
    return tuple(rank[v] for v in w)


def is_standard(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def descent_set(p: Sequence[int]) -> tuple:
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def reverse(p: Sequence[int]) -> tuple:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> tuple:
    """Swap the i-th smallest letter with the i-th largest."""
    srt = sorted(p)
    swap = {v: srt[-1 - i] for i, v in enumerate(srt)}
    return tuple(swap[v] for v in p)


def reverse_complement(p: Sequence[int]) -> tuple:
    return complement(reverse(p))


def all_permutations(n: int):
    from itertools import permutations

    return permutations(range(1, n + 1))
