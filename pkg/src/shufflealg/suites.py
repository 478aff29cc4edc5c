"""Verification suites.  Each suite yields plain dict records.

Record fields: suite, check_id, params, status, witness.  Status is one of
pass, fail, erratum (a printed claim refuted as expected), warn (a claimed
non-compatible statistic not refuted within the bound) or info.
"""

from __future__ import annotations

from .comps import canonical_perm, compositions_of
from .nsym import duality_check
from .perm import to_str
from .qseries import maj_shuffle_identity, stanley_lhs, stanley_rhs
from .shuffle import bijection_check
from .stats import format_value

DEFAULT_MAX = {
    "stanley": 8, "dims": 8, "duality": 7, "homs": 6, "gfs": 5, "spans": 6,
    "equivs": 8, "values": 8, "lemma27": 7, "compat": 8,
}
SUITES = tuple(DEFAULT_MAX)
INCOMPAT_MAX_BOUND = 10


def _rec(suite, check_id, params, ok, witness=None, status=None):
    return {"suite": suite, "check_id": check_id, "params": params,
            "status": status or ("pass" if ok else "fail"), "witness": witness}


def canonical_pair(J, K):
    m = sum(J)
    return canonical_perm(J), tuple(x + m for x in canonical_perm(K))


def _pairs(total):
    for m in range(0, total + 1):
        for J in compositions_of(m):
            for K in compositions_of(total - m):
                yield J, K


def suite_stanley(N, **_):
    for total in range(1, N + 1):
        bad = None
        count = 0
        for J, K in _pairs(total):
            p, s = canonical_pair(J, K)
            count += 1
            for k in range(total):
                if stanley_lhs(p, s, k) != stanley_rhs(p, s, k):
                    bad = bad or {"p": to_str(p), "s": to_str(s), "k": k}
            lhs, rhs = maj_shuffle_identity(p, s)
            if lhs != rhs:
                bad = bad or {"p": to_str(p), "s": to_str(s), "identity": "maj"}
        yield _rec("stanley", f"stanley/size={total}", {"size": total, "pairs": count},
                   bad is None, bad)


def suite_dims(N, **_):
    from .compat.catalog import DIMENSION_FORMULAS
    from .compat.classes import dimension

    for name, f in DIMENSION_FORMULAS.items():
        got = [dimension(name, n) for n in range(1, N + 1)]
        want = [f(n) for n in range(1, N + 1)]
        yield _rec("dims", f"dims/{name}", {"st": name, "computed": got, "expected": want},
                   got == want, None if got == want else {"computed": got, "expected": want})


def suite_duality(N, **_):
    for n in range(0, N + 1):
        yield _rec("duality", f"duality/n={n}", {"n": n}, duality_check(n))


def suite_homs(N, **_):
    from .compat.homs import CHARACTERIZED, SERIES_STATS, verify_homomorphism

    for st in CHARACTERIZED:
        for total in range(2, N + 1):
            for m in range(1, total):
                n = total - m
                ok = verify_homomorphism(st, m, n, mode="point")
                params = {"st": st, "m": m, "n": n, "mode": "maj" if st == "maj" else "point"}
                if st in SERIES_STATS:
                    ok = ok and verify_homomorphism(st, m, n, mode="series")
                    params["mode"] = "point+series"
                yield _rec("homs", f"homs/{st}/m={m},n={n}", params, ok)


def suite_gfs(N, **_):
    from .compat.gfs import KINDS, verify_gf_identity

    for kind in KINDS:
        for n in range(1, N + 1):
            yield _rec("gfs", f"gfs/{kind}/n={n}", {"kind": kind, "n": n, "P": n + 3},
                       verify_gf_identity(kind, n, n + 3))


def suite_spans(N, **_):
    from .compat.spans import pkdes_span_ranks, verify_span_pk, verify_span_pkdes

    for n in range(1, min(N, 8) + 1):
        yield _rec("spans", f"spans/pk/n={n}", {"n": n, "rank": (n + 1) // 2},
                   verify_span_pk(n))
        for form in ("corrected", "z"):
            yield _rec("spans", f"spans/pkdes-{form}/n={n}",
                       {"n": n, "form": form, "rank": (n + 1) ** 2 // 4},
                       verify_span_pkdes(n, form))
        # the printed y-form: spans agree only when the union rank equals both ranks
        r, b, u = pkdes_span_ranks(n, "printed")
        agrees = r == b == u
        status = "pass" if agrees else "erratum"
        yield _rec("spans", f"spans/pkdes-printed/n={n}", {"n": n, "form": "printed"},
                   True, {"ranks": [r, b, u]}, status=status)


def suite_equivs(N, **_):
    from .compat.catalog import EQUIVALENCE_ERRATA, EQUIVALENCE_ROWS, TEXT_EQUIVALENCES
    from .compat.equivs import equivalence_witness

    for a, b, kind in EQUIVALENCE_ROWS + TEXT_EQUIVALENCES:
        w = equivalence_witness(a, b, kind, N)
        wit = None if w is None else {"pi": to_str(w[0]), "sigma": to_str(w[1])}
        if (a, b, kind) in EQUIVALENCE_ERRATA:
            status = "erratum" if w is not None else "fail"
        else:
            status = "pass" if w is None else "fail"
        yield _rec("equivs", f"equivs/{kind}/{a}~{b}", {"st1": a, "st2": b, "kind": kind},
                   True, wit, status=status)


def suite_values(N, **_):
    from .compat.values import VALUE_STATS, attained, check_witnesses, lemma_identities, predicted

    for n in range(1, N + 1):
        bad = {k: to_str(v) for k, v in lemma_identities(n).items() if v is not None}
        yield _rec("values", f"values/lemmas/n={n}", {"n": n}, not bad, bad or None)
        for st in VALUE_STATS:
            got, want = attained(st, n), predicted(st, n)
            diff = None
            if got != want:
                diff = {"missing": sorted(want - got), "extra": sorted(got - want)}
            yield _rec("values", f"values/{st}/n={n}", {"st": st, "n": n, "count": len(got)},
                       got == want, diff)
            if st in ("(pk,des)", "(lpk,des)", "(udr,des)"):
                wb = check_witnesses(st, n)
                yield _rec("values", f"values/{st}/witnesses/n={n}", {"st": st, "n": n},
                           not wb, [list(x[:2]) + [list(x[2])] for x in wb] or None)


def suite_lemma27(N, **_):
    for total in range(1, N + 1):
        bad, count = None, 0
        for J, K in _pairs(total):
            p, s = canonical_pair(J, K)
            count += 1
            if not bijection_check(p, s):
                bad = bad or {"p": to_str(p), "s": to_str(s)}
        yield _rec("lemma27", f"lemma27/size={total}", {"size": total, "pairs": count},
                   bad is None, bad)


def compat_record(st, N, relabelings=3, seed=1, jobs=1):
    """Check one statistic against its claim; raises the bound for claimed
    non-compatible statistics that survive N."""
    from .compat.catalog import claim
    from .compat.check import check_compatibility

    c = claim(st)
    v = check_compatibility(st, N, relabelings, seed, jobs)
    bound = N
    if c == "incompatible":
        while v.compatible and bound < max(N, INCOMPAT_MAX_BOUND):
            bound += 1
            v = check_compatibility(st, bound, relabelings, seed, jobs)
    if c == "compatible" or c == "unknown" and v.compatible:
        status = "pass" if v.compatible else "fail"
    elif c == "incompatible":
        status = "pass" if not v.compatible else "warn"
    else:
        status = "info"
    params = {"st": v.st, "N": N, "bound": bound, "claim": c, "verdict": v.status,
              "relabelings": relabelings, "seed": seed}
    return _rec("compat", f"compat/{v.st}", params, True, v.witness, status=status)


def suite_compat(N, relabelings=3, seed=1, jobs=1, **_):
    from .compat.catalog import (CLAIMED_COMPATIBLE, CLAIMED_INCOMPATIBLE, CONJECTURED,
                                 EQUIVALENT_TO_COMPATIBLE)

    for st in CLAIMED_COMPATIBLE + EQUIVALENT_TO_COMPATIBLE + CLAIMED_INCOMPATIBLE + CONJECTURED:
        yield compat_record(st, max(N, 2), relabelings, seed, jobs)


RUNNERS = {
    "stanley": suite_stanley, "dims": suite_dims, "duality": suite_duality,
    "homs": suite_homs, "gfs": suite_gfs, "spans": suite_spans,
    "equivs": suite_equivs, "values": suite_values, "lemma27": suite_lemma27,
    "compat": suite_compat,
}


def run_suite(name: str, N: int | None = None, **kw) -> list:
    """Records of one suite (or 'all'), sorted by check id."""
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s not in RUNNERS:
            raise KeyError(s)
        out.extend(RUNNERS[s](DEFAULT_MAX[s] if N is None else N, **kw))
    return sorted(out, key=lambda r: r["check_id"])
