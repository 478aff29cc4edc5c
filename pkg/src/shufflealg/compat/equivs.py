"""Equivalence and f-equivalence of statistics, checked fiber by fiber."""

from __future__ import annotations

from ..perm import all_permutations, complement, reverse, reverse_complement
from ..stats import evaluate, parse_stat

SYMMETRIES = {
    "plain": lambda p: p,
    "r": reverse,
    "c": complement,
    "rc": reverse_complement,
}


def equivalence_witness(st1, st2, kind: str = "plain", N: int = 8):
    """First pair of permutations separating st1∘f from st2, or None.

    A witness is (pi, sigma) of the same length where exactly one of the two
    statistics takes equal values.
    """
    st1, st2 = parse_stat(st1), parse_stat(st2)
    f = SYMMETRIES[kind]
    for n in range(1, N + 1):
        fwd, back = {}, {}
        for p in all_permutations(n):
            a, b = evaluate(st1, f(p)), evaluate(st2, p)
            if a in fwd and fwd[a][0] != b:
                return fwd[a][1], p
            if b in back and back[b][0] != a:
                return back[b][1], p
            fwd.setdefault(a, (b, p))
            back.setdefault(b, (a, p))
    return None


def equivalence_check(pair, kind: str = "plain", N: int = 8) -> bool:
    """True iff st1∘f and st2 have the same fibers on S_n for all n <= N."""
    st1, st2 = pair
    return equivalence_witness(st1, st2, kind, N) is None
