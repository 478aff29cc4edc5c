"""Attained values of joint statistics and the explicit witness compositions."""

from __future__ import annotations

from math import comb

from ..comps import canonical_perm
from ..perm import all_permutations
from ..stats import evaluate, parse_stat


def attained(st, n: int) -> set:
    st = parse_stat(st)
    return {evaluate(st, p) for p in all_permutations(n)}


def predicted(st, n: int) -> set:
    """Value set described by the possible-value propositions (n >= 1)."""
    name = parse_stat(st).name
    if name in ("(des,maj)", "(des,comaj)"):
        return {(j, k) for j in range(n)
                for k in range(comb(j + 1, 2), n * j - comb(j + 1, 2) + 1)}
    if name == "(pk,des)":
        return {(j, k) for j in range((n - 1) // 2 + 1) for k in range(j, n - j)}
    if name == "(lpk,des)":
        return {(0, 0)} | {(j, k) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1)}
    if name == "(udr,des)":
        return {(1, 0)} | {(j, k) for j in range(2, n + 1)
                           for k in range(j // 2, n - (j + 1) // 2 + 1)}
    raise ValueError(f"no value proposition for {name}")


VALUE_STATS = ("(des,maj)", "(des,comaj)", "(pk,des)", "(lpk,des)", "(udr,des)")


def witness_composition(st, n: int, j: int, k: int) -> tuple:
    """The explicit composition used to attain (j, k)."""
    name = parse_stat(st).name
    if name == "(pk,des)":
        return (2,) * j + (1,) * (k - j) + (n - k - j,)
    if name == "(lpk,des)":
        if j == 0:
            return (n,)
        return (1,) * (k - j + 1) + (2,) * (j - 1) + (n - k - j + 1,)
    if name == "(udr,des)":
        if j == 1:
            return (n,)
        if j == 2:
            return (n - k,) + (1,) * k
        if j % 2 == 0:
            h = j // 2
            return (1, n - h - k + 2) + (2,) * (h - 2) + (1,) * (k - h + 1)
        h = (j - 1) // 2
        return (1,) + (1,) * (k - h) + (2,) * (h - 1) + (n - h - 1 - k + 2,)
    raise ValueError(f"no witness construction for {name}")


def check_witnesses(st, n: int) -> list:
    """(j, k, composition) triples whose witness fails to attain (j, k)."""
    bad = []
    for j, k in sorted(predicted(st, n)):
        L = witness_composition(st, n, j, k)
        if min(L) < 1 or sum(L) != n or evaluate(st, canonical_perm(L)) != (j, k):
            bad.append((j, k, L))
    return bad


def _lemma_rows(p):
    v = {t: evaluate(t, p) for t in
         ("pk", "val", "lpk", "rpk", "epk", "udr", "lr", "lir", "lfr", "sir", "sfr")}
    n = len(p)
    final_short = n >= 2 and p[-2] > p[-1]
    return {
        "pk=lr-lfr": v["pk"] == v["lr"] - v["lfr"],
        "val=lr-lir": v["val"] == v["lr"] - v["lir"],
        "lpk=lr+sir-lfr": v["lpk"] == (v["lr"] + v["sir"] - v["lfr"] if n >= 2 else 0),
        "rpk=lr": v["rpk"] == v["lr"],
        "epk=val+1": v["epk"] == v["val"] + 1,
        "udr=lpk+val+1": v["udr"] == v["lpk"] + v["val"] + 1,
        "lpk=floor(udr/2)": v["lpk"] == v["udr"] // 2,
        "val=floor((udr-1)/2)": v["val"] == (v["udr"] - 1) // 2,
        "lpk-val by final run": v["lpk"] == v["val"] + (1 if final_short else 0),
    }


def lemma_identities(n: int) -> dict:
    """Identity name -> first permutation of [n] violating it (or None)."""
    out = {}
    for p in all_permutations(n):
        for name, ok in _lemma_rows(p).items():
            out.setdefault(name, None)
            if not ok and out[name] is None:
                out[name] = p
    return out
