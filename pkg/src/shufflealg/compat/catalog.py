"""Known claims: dimension formulas, compatibility claims and equivalence rows."""

from __future__ import annotations

from math import comb

from ..stats import parse_stat
from .classes import dimension


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _two(n):
    # the family has two classes once n >= 2; at n = 1 everything is one class
    return 2 if n >= 2 else 1


def _desij(i, j):
    return lambda n: 2 ** min(i + j, n - 1)


DIMENSION_FORMULAS = {}
for _names, _f in [
    (("Des",), lambda n: 2 ** (n - 1)),
    (("des",), lambda n: n),
    (("maj", "comaj"), lambda n: comb(n, 2) + 1),
    (("(des,maj)", "(des,comaj)"), lambda n: comb(n, 3) + n),
    (("Pk", "Val"), fib),
    (("pk", "val", "epk"), lambda n: (n + 1) // 2),
    (("Lpk", "Rpk"), lambda n: fib(n + 1)),
    (("lpk", "rpk", "lr"), lambda n: n // 2 + 1),
    (("Des[1,0]", "Des[0,1]", "sir", "lir", "sfr", "lfr"), _two),
    (("(pk,des)", "(val,des)", "(epk,des)"), lambda n: (n + 1) ** 2 // 4),
    (("(lpk,des)", "(rpk,des)", "(lr,des)"), lambda n: n * n // 4 + 1),
    (("udr", "(lpk,val)", "(lpk,pk)", "(lpk,epk)", "(rpk,val)", "(rpk,pk)",
      "(rpk,epk)", "(lr,val)", "(lr,pk)", "(lr,epk)"), lambda n: n),
    (("(udr,des)", "(lpk,val,des)", "(lpk,epk,des)", "(lpk,pk,des)"),
     lambda n: comb(n, 2) + 1),
    (("Epk",), lambda n: fib(n + 2) - 1),
]:
    for _name in _names:
        DIMENSION_FORMULAS[_name] = _f
for _i in range(5):
    for _j in range(5 - _i):
        if _i + _j >= 2:
            DIMENSION_FORMULAS[f"Des[{_i},{_j}]"] = _desij(_i, _j)

# every statistic in the dimension table is claimed shuffle-compatible
CLAIMED_COMPATIBLE = tuple(DIMENSION_FORMULAS)

CLAIMED_INCOMPATIBLE = (
    "PkUVal", "(pk,val)", "(pk,val,des)", "(Pk,des)", "(Pk,val)", "(Pk,val,des)",
    "(Pk,Val)", "(Lpk,des)", "(Lpk,val,des)", "(Epk,des)",
    "br", "(br,des)", "(br,maj)", "(br,des,maj)", "(br,pk)", "(br,pk,des)",
    "(br,lpk)", "(br,lpk,des)", "(Pk,br)",
    "(pk,maj)", "(pk,des,maj)", "(lpk,maj)", "(lpk,des,maj)", "(Pk,maj)",
    "(Lpk,maj)", "(udr,maj)", "(udr,des,maj)", "(lir,maj)",
    "altdes", "altmaj", "Ddes", "ddes",
)

CONJECTURED = ("(udr,pk)", "(udr,pk,des)")

# extra statistics known to be equivalent to a compatible one
EQUIVALENT_TO_COMPATIBLE = ("altDes", "(Lpk,val)", "(Pk,udr)", "(Lpk,br)", "(Epk,br)")


def _chain(kind, *names):
    return [(a, b, kind) for a, b in zip(names, names[1:])]


EQUIVALENCE_ROWS = tuple(
    _chain("plain", "Des", "LpkUVal", "(Lpk,Val)")
    + _chain("plain", "val", "epk")
    + _chain("plain", "rpk", "epk")
    + _chain("plain", "rpk", "lr")
    + _chain("plain", "udr", "(lpk,val)")
    + _chain("plain", "Epk", "(Epk,val)", "(Epk,udr)", "(Epk,br)", "(Lpk,val)",
             "(Lpk,udr)", "(Pk,udr)")
    + _chain("plain", "sir", "lir", "Des[1,0]")
    + _chain("plain", "sfr", "lfr", "Des[0,1]")
    + _chain("plain", "(Pk,val)", "(Pk,br)")
    + _chain("plain", "(Lpk,val)", "(Lpk,br)")
    + _chain("plain", "(pk,val)", "(pk,br)", "(val,br)")
    + _chain("r", "Lpk", "Rpk") + _chain("r", "lpk", "rpk")
    + _chain("r", "sir", "lfr") + _chain("r", "sfr", "lir")
    + _chain("c", "Pk", "Val") + _chain("c", "pk", "val")
    + _chain("rc", "(pk,des)", "(val,des)") + _chain("rc", "(lpk,val)", "(lpk,pk)")
)

# rows of the equivalence table that fail by direct computation
EQUIVALENCE_ERRATA = {("rpk", "epk", "plain")}

# equivalences stated in the running text
TEXT_EQUIVALENCES = (
    ("(des,maj)", "(des,comaj)", "plain"),
    ("maj", "comaj", "rc"),
    ("(lpk,des)", "(rpk,asc)", "r"),
    ("(rpk,asc)", "(rpk,des)", "plain"),
    ("(udr,des)", "(lpk,val,des)", "plain"),
    ("(lpk,val,des)", "(lpk,epk,des)", "plain"),
    ("(udr,des)", "(lpk,pk,des)", "rc"),
)


def claim(st) -> str:
    """'compatible', 'incompatible', 'conjectured' or 'unknown'."""
    name = parse_stat(st).name
    if name in CLAIMED_COMPATIBLE or name in EQUIVALENT_TO_COMPATIBLE:
        return "compatible"
    if name.startswith("Des[") or name == "Des[0,0]":
        return "compatible"
    if name in CLAIMED_INCOMPATIBLE:
        return "incompatible"
    if name in CONJECTURED:
        return "conjectured"
    return "unknown"


def dimension_rows(N: int) -> list:
    """(name, n, computed, expected) for every formula and 1 <= n <= N."""
    rows = []
    for name, f in DIMENSION_FORMULAS.items():
        for n in range(1, N + 1):
            rows.append((name, n, dimension(name, n), f(n)))
    return rows
