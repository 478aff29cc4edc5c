"""Statistic identifiers, evaluation, and canonical value encoding.

Values are plain Python objects: ``int`` for numbers, :class:`IntSet` for
sets, and ``tuple`` for joint statistics.  All of them are hashable and
totally ordered within one statistic, so a distribution is just a sorted
list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .errors import UnknownStatistic


class IntSet(tuple):
    """Strictly increasing tuple of integers, printed as a set."""

    def __new__(cls, items=()):
        return super().__new__(cls, sorted(set(items)))

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"

    __str__ = __repr__


StatValue = Union[int, IntSet, tuple]

# tag -> kind ("int" or "set"); order fixes the documented listing
SIMPLE_TAGS = {
    "Des": "set", "des": "int", "maj": "int", "comaj": "int", "asc": "int",
    "Pk": "set", "pk": "int", "Val": "set", "val": "int",
    "Lpk": "set", "lpk": "int", "Rpk": "set", "rpk": "int",
    "Epk": "set", "epk": "int", "br": "int", "udr": "int",
    "lr": "int", "lir": "int", "lfr": "int", "sir": "int", "sfr": "int",
    "altDes": "set", "altdes": "int", "altmaj": "int",
    "Ddes": "set", "ddes": "int",
    "PkUVal": "set", "LpkUVal": "set",
}

_ALIASES = {
    "Pk∪Val": "PkUVal", "Pk|Val": "PkUVal",
    "Lpk∪Val": "LpkUVal", "Lpk|Val": "LpkUVal",
}


@dataclass(frozen=True)
class Statistic:
    """A statistic: a simple tag, ``DesIJ`` with ``args=(i, j)``, or ``Tuple``."""

    tag: str
    args: tuple = ()

    def __post_init__(self):
        if self.tag == "Tuple":
            if not self.args:
                raise UnknownStatistic("empty tuple statistic")
            if any(not isinstance(a, Statistic) or a.tag == "Tuple" for a in self.args):
                raise UnknownStatistic("tuple components must be non-tuple statistics")
        elif self.tag == "DesIJ":
            if len(self.args) != 2 or any(not isinstance(a, int) or a < 0 for a in self.args):
                raise UnknownStatistic("Des_{i,j} needs two non-negative integers")
        elif self.tag not in SIMPLE_TAGS:
            raise UnknownStatistic(f"unknown statistic {self.tag!r}")

    @property
    def name(self) -> str:
        if self.tag == "Tuple":
            return "(" + ",".join(a.name for a in self.args) + ")"
        if self.tag == "DesIJ":
            return "Des[%d,%d]" % self.args
        return self.tag

    def __str__(self):
        return self.name

    @property
    def components(self) -> tuple:
        return self.args if self.tag == "Tuple" else (self,)

    def __call__(self, p: Sequence[int]) -> StatValue:
        return evaluate(self, p)


_DESIJ = re.compile(r"^Des(?:_\{(\d+),(\d+)\}|\[(\d+),(\d+)\]|_(\d+)_(\d+))$")


def _parse_simple(tok: str) -> Statistic:
    tok = _ALIASES.get(tok, tok)
    m = _DESIJ.match(tok)
    if m:
        i, j = [int(g) for g in m.groups() if g is not None]
        return Statistic("DesIJ", (i, j))
    if tok not in SIMPLE_TAGS:
        raise UnknownStatistic(f"unknown statistic {tok!r}")
    return Statistic(tok)


def parse_stat(text) -> Statistic:
    """Parse ``des``, ``(pk,des)``, ``pk,des``, ``Des[1,2]``, ``Des_{1,2}``."""
    if isinstance(text, Statistic):
        return text
    s = re.sub(r"\s+", "", str(text))
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    # split on commas that are not inside brackets
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch in "[{":
            depth += 1
        elif ch in "]}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    if any(not t for t in parts):
        raise UnknownStatistic(f"cannot parse statistic {text!r}")
    comps = tuple(_parse_simple(t) for t in parts)
    if len(comps) == 1:
        return comps[0]
    return Statistic("Tuple", comps)


# --- evaluation -----------------------------------------------------------


def _peaks(w: Sequence[int], lo: int, hi: int) -> list:
    # positions i (1-based in w) with lo <= i <= hi and w[i-1] < w[i] > w[i+1]
    return [i for i in range(max(lo, 2), min(hi, len(w) - 1) + 1)
            if w[i - 2] < w[i - 1] > w[i]]


def _runs(p: Sequence[int]) -> list:
    if not p:
        return []
    lengths, cur = [], 1
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            lengths.append(cur)
            cur = 1
        else:
            cur += 1
    lengths.append(cur)
    return lengths


def _biruns(w: Sequence[int]) -> int:
    if len(w) <= 1:
        return len(w)
    changes = sum(1 for i in range(1, len(w) - 1)
                  if (w[i - 1] < w[i]) != (w[i] < w[i + 1]))
    return changes + 1


def _simple(tag: str, p: tuple):
    n = len(p)
    if tag == "Des":
        return IntSet(i for i in range(1, n) if p[i - 1] > p[i])
    if tag == "des":
        return sum(1 for i in range(1, n) if p[i - 1] > p[i])
    if tag == "asc":
        return sum(1 for i in range(1, n) if p[i - 1] < p[i])
    if tag == "maj":
        return sum(i for i in range(1, n) if p[i - 1] > p[i])
    if tag == "comaj":
        return sum(n - i for i in range(1, n) if p[i - 1] > p[i])
    if tag in ("Pk", "pk"):
        s = _peaks(p, 2, n - 1)
        return IntSet(s) if tag == "Pk" else len(s)
    if tag in ("Val", "val"):
        s = _peaks(tuple(-x for x in p), 2, n - 1)
        return IntSet(s) if tag == "Val" else len(s)
    if tag in ("Lpk", "lpk"):
        s = [i - 1 for i in _peaks((0,) + p, 2, n)]
        return IntSet(s) if tag == "Lpk" else len(s)
    if tag in ("Rpk", "rpk"):
        s = _peaks(p + (0,), 2, n)
        return IntSet(s) if tag == "Rpk" else len(s)
    if tag in ("Epk", "epk"):
        # peaks of 0p0 shifted by one; gives {1} when n = 1
        s = [i - 1 for i in _peaks((0,) + p + (0,), 2, n + 1)]
        return IntSet(s) if tag == "Epk" else len(s)
    if tag == "br":
        return _biruns(p)
    if tag == "udr":
        return _biruns((0,) + p) if n else 0
    if tag in ("lr", "lir", "lfr", "sir", "sfr"):
        runs = _runs(p)
        if not runs:
            return 0
        if tag == "lr":
            return sum(1 for r in runs if r >= 2)
        if tag == "lir":
            return int(runs[0] >= 2)
        if tag == "lfr":
            return int(runs[-1] >= 2)
        if tag == "sir":
            return int(runs[0] == 1)
        return int(runs[-1] == 1)
    if tag in ("altDes", "altdes", "altmaj"):
        s = [i for i in range(1, n)
             if (p[i - 1] > p[i]) == (i % 2 == 1)]
        if tag == "altDes":
            return IntSet(s)
        return len(s) if tag == "altdes" else sum(s)
    if tag in ("Ddes", "ddes"):
        s = [i for i in range(2, n) if p[i - 2] > p[i - 1] > p[i]]
        return IntSet(s) if tag == "Ddes" else len(s)
    if tag == "PkUVal":
        return IntSet(_simple("Pk", p) + _simple("Val", p))
    if tag == "LpkUVal":
        return IntSet(_simple("Lpk", p) + _simple("Val", p))
    raise UnknownStatistic(tag)


def evaluate(st, p: Sequence[int]) -> StatValue:
    """Value of statistic ``st`` on permutation ``p``."""
    st = parse_stat(st)
    p = tuple(p)
    if st.tag == "Tuple":
        return tuple(evaluate(a, p) for a in st.args)
    if st.tag == "DesIJ":
        i, j = st.args
        n = len(p)
        return IntSet(k for k in range(1, n)
                      if p[k - 1] > p[k] and (k <= i or k >= n - j))
    return _simple(st.tag, p)


@lru_cache(maxsize=None)
def value_on_descents(st: Statistic, n: int, des: tuple) -> StatValue:
    """Value of a descent statistic on any n-permutation with descent set ``des``."""
    from .comps import canonical_perm, comp_of_set

    return evaluate(st, canonical_perm(comp_of_set(des, n)))


def format_value(v: StatValue) -> str:
    if isinstance(v, IntSet):
        return repr(v)
    if isinstance(v, tuple):
        return "(" + ",".join(format_value(x) for x in v) + ")"
    return str(v)


def to_json(v: StatValue):
    """Canonical JSON-ready encoding: sets and tuples become lists."""
    if isinstance(v, tuple):
        return [to_json(x) for x in v]
    return v
