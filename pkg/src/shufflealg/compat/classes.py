"""Equivalence classes of compositions and shuffle-algebra structure constants."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from ..comps import canonical_perm, compositions_of
from ..errors import IncompatibleAtRange
from ..nsym import fundamental_product
from ..stats import Statistic, StatValue, evaluate, parse_stat


@dataclass(frozen=True)
class ClassTable:
    """Compositions of n grouped by the value of ``st`` on a representative.

    Classes are listed in increasing order of their values.
    """

    st: Statistic
    n: int
    classes: tuple  # of (value, tuple of compositions in lex order)

    def __len__(self):
        return len(self.classes)

    @property
    def values(self) -> tuple:
        return tuple(v for v, _ in self.classes)

    def index(self) -> dict:
        """Map composition -> class index."""
        return {L: i for i, (_, members) in enumerate(self.classes) for L in members}


@lru_cache(maxsize=None)
def _classes(st: Statistic, n: int) -> ClassTable:
    groups = defaultdict(list)
    for L in compositions_of(n):
        groups[evaluate(st, canonical_perm(L))].append(L)
    return ClassTable(st, n, tuple((v, tuple(groups[v])) for v in sorted(groups)))


def classes(st, n: int) -> ClassTable:
    return _classes(parse_stat(st), n)


def dimension(st, n: int) -> int:
    """Number of st-classes of compositions of n."""
    return len(classes(st, n))


def class_of(st, L) -> StatValue:
    return evaluate(parse_stat(st), canonical_perm(L))


@dataclass(frozen=True)
class StructureConstants:
    """c^alpha_{beta,gamma}: table[(b, g, a)] with indices into the class tables."""

    st: Statistic
    m: int
    n: int
    left: ClassTable
    right: ClassTable
    target: ClassTable
    table: dict

    def product(self, b: int, g: int) -> dict:
        """{alpha index: coefficient} for the product of classes b and g."""
        return {a: c for (bb, gg, a), c in self.table.items() if bb == b and gg == g}


@lru_cache(maxsize=None)
def _structure_constants(st: Statistic, m: int, n: int) -> StructureConstants:
    left, right, target = _classes(st, m), _classes(st, n), _classes(st, m + n)
    tidx = target.index()
    table = {}
    for b, (_, Js) in enumerate(left.classes):
        for g, (_, Ks) in enumerate(right.classes):
            agg = None
            for J in Js:
                for K in Ks:
                    cur = defaultdict(int)
                    for L, c in fundamental_product(J, K):
                        cur[tidx[L]] += c
                    cur = dict(cur)
                    if agg is None:
                        agg = cur
                    elif cur != agg:
                        raise IncompatibleAtRange(
                            f"{st.name}: products of classes {left.classes[b][0]} and "
                            f"{right.classes[g][0]} depend on representatives "
                            f"({Js[0]},{Ks[0]}) vs ({J},{K})")
            for a, c in agg.items():
                table[(b, g, a)] = c
    return StructureConstants(st, m, n, left, right, target, table)


def structure_constants(st, m: int, n: int) -> StructureConstants:
    return _structure_constants(parse_stat(st), m, n)
