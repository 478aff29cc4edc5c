"""Brute-force shuffle-compatibility verdicts.

Search order: total size m+n increasing, then m increasing, then (J, K) in
lexicographic order of compositions.  For each (J, K) the canonical disjoint
pair is tried first, followed by the seeded random relabelings.  The first
realization whose distribution differs from the one stored for its class
pair is the reported counterexample.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from ..comps import canonical_perm, comp_of_perm, compositions_of
from ..shuffle import shuffles
from ..stats import Statistic, format_value, parse_stat, to_json, value_on_descents
from .classes import classes

RELABEL_CACHE_MAX = 8


@dataclass(frozen=True)
class Realization:
    J: tuple
    K: tuple
    p: tuple
    s: tuple
    label: str  # "canonical" or "relabel-<r>"


@dataclass
class CompatVerdict:
    st: str
    N: int
    relabelings: int
    seed: int
    status: str  # "Compatible" or "Counterexample"
    pairs_checked: int = 0
    witness: dict | None = field(default=None)

    @property
    def compatible(self) -> bool:
        return self.status == "Compatible"

    def to_dict(self) -> dict:
        return {"st": self.st, "N": self.N, "relabelings": self.relabelings,
                "seed": self.seed, "status": self.status,
                "pairs_checked": self.pairs_checked, "witness": self.witness}


@lru_cache(maxsize=None)
def _perms_by_comp(m: int) -> dict:
    out = {}
    for q in permutations(range(1, m + 1)):
        out.setdefault(comp_of_perm(q), []).append(q)
    return out


def _random_pattern(rng: random.Random, J: tuple) -> tuple:
    """Uniformly random standard permutation with descent composition J."""
    m = sum(J)
    if m <= RELABEL_CACHE_MAX:
        return rng.choice(_perms_by_comp(m)[J])
    while True:  # rejection sampling for larger sizes
        vals = list(range(1, m + 1))
        rng.shuffle(vals)
        out, i = [], 0
        for part in J:
            out.extend(sorted(vals[i:i + part]))
            i += part
        if comp_of_perm(out) == J:
            return tuple(out)


def realizations(J: tuple, K: tuple, relabelings: int, seed: int) -> list:
    """Canonical disjoint pair plus seeded random relabelings."""
    m, n = sum(J), sum(K)
    out = [Realization(J, K, canonical_perm(J),
                       tuple(x + m for x in canonical_perm(K)), "canonical")]
    for r in range(relabelings):
        rng = random.Random(f"{seed}|{J}|{K}|{r}")
        pvals = sorted(rng.sample(range(1, m + n + 1), m))
        svals = sorted(set(range(1, m + n + 1)) - set(pvals))
        p = tuple(pvals[x - 1] for x in _random_pattern(rng, J))
        s = tuple(svals[x - 1] for x in _random_pattern(rng, K))
        out.append(Realization(J, K, p, s, f"relabel-{r + 1}"))
    return out


@lru_cache(maxsize=None)
def descent_multiset(p: tuple, s: tuple) -> tuple:
    """Sorted (descent set, multiplicity) pairs over all shuffles of p and s."""
    tally = Counter()
    for t in shuffles(p, s):
        tally[tuple(i for i in range(1, len(t)) if t[i - 1] > t[i])] += 1
    return tuple(sorted(tally.items()))


def stat_distribution(st: Statistic, p: tuple, s: tuple) -> tuple:
    """Distribution of a descent statistic over S(p, s) as sorted (value, count)."""
    N = len(p) + len(s)
    tally = Counter()
    for D, c in descent_multiset(p, s):
        tally[value_on_descents(st, N, D)] += c
    return tuple(sorted(tally.items()))


def _dist_json(dist) -> list:
    return [[to_json(v), c] for v, c in dist]


def _dist_str(dist) -> str:
    return "{" + ", ".join(f"{format_value(v)}:{c}" for v, c in dist) + "}"


def _real_json(r: Realization, dist) -> dict:
    return {"J": list(r.J), "K": list(r.K), "p": list(r.p), "s": list(r.s),
            "label": r.label, "distribution": _dist_json(dist),
            "distribution_text": _dist_str(dist)}


_PREFETCHED: dict = {}


def _descent_multiset_job(pair):
    return descent_multiset(*pair)


def _prefetch(pairs: list, jobs: int):
    """Fill the descent-multiset table in worker processes."""
    if jobs <= 1 or not pairs:
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for pair, res in zip(pairs, ex.map(_descent_multiset_job, pairs, chunksize=16)):
            _PREFETCHED[pair] = res


def _dm(p, s):
    got = _PREFETCHED.get((p, s))
    return got if got is not None else descent_multiset(p, s)


def check_compatibility(st, N: int, relabelings: int = 3, seed: int = 1,
                        jobs: int = 1) -> CompatVerdict:
    """Compatible iff distributions depend only on (class of J, class of K)."""
    st = parse_stat(st)
    if N < 2:
        raise ValueError("N must be at least 2")
    verdict = CompatVerdict(st.name, N, relabelings, seed, "Compatible")
    for total in range(2, N + 1):
        todo = []
        for m in range(1, total):
            for J in compositions_of(m):
                for K in compositions_of(total - m):
                    todo.extend(realizations(J, K, relabelings, seed))
        _prefetch([(r.p, r.s) for r in todo if (r.p, r.s) not in _PREFETCHED], jobs)
        reps = {}
        for r in todo:
            m, n = sum(r.J), sum(r.K)
            idx_m, idx_n = classes(st, m).index(), classes(st, n).index()
            key = (m, idx_m[r.J], idx_n[r.K])
            tally = Counter()
            for D, c in _dm(r.p, r.s):
                tally[value_on_descents(st, total, D)] += c
            dist = tuple(sorted(tally.items()))
            verdict.pairs_checked += 1
            if key not in reps:
                reps[key] = (r, dist)
            elif reps[key][1] != dist:
                first, fdist = reps[key]
                verdict.status = "Counterexample"
                verdict.witness = {
                    "size": [m, n],
                    "first": _real_json(first, fdist),
                    "second": _real_json(r, dist),
                }
                return verdict
    return verdict
