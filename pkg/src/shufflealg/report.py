"""Report rendering: JSON lines for machines, an aligned table for people."""

from __future__ import annotations

import json


def _sorted(records):
    return sorted(records, key=lambda r: r["check_id"])


def to_jsonl(records) -> str:
    lines = [json.dumps({k: r.get(k) for k in ("suite", "check_id", "params", "status", "witness")},
                        sort_keys=True, separators=(",", ":"))
             for r in _sorted(records)]
    return "\n".join(lines) + ("\n" if lines else "")


def _detail(r) -> str:
    p = r.get("params") or {}
    if r["suite"] == "dims":
        return "computed " + " ".join(map(str, p["computed"]))
    if r["suite"] == "compat":
        out = f"{p['verdict']} (claim {p['claim']}, bound {p['bound']})"
        w = r.get("witness")
        if w:
            a, b = w["first"], w["second"]
            out += f"  {a['J']}x{a['K']} vs {b['J']}x{b['K']}"
        return out
    w = r.get("witness")
    return "" if w is None else json.dumps(w, sort_keys=True)


def to_table(records, title: str = "") -> str:
    rows = [(r["check_id"], r["status"], _detail(r)) for r in _sorted(records)]
    w0 = max([len("check"), *(len(a) for a, _, _ in rows)])
    w1 = max([len("status"), *(len(b) for _, b, _ in rows)])
    out = [title] if title else []
    out.append(f"{'check':<{w0}}  {'status':<{w1}}  detail")
    out.append(f"{'-' * w0}  {'-' * w1}  ------")
    out += [f"{a:<{w0}}  {b:<{w1}}  {c}".rstrip() for a, b, c in rows]
    failed = sum(1 for _, b, _ in rows if b == "fail")
    out.append(f"{len(rows)} checks, {failed} failed")
    return "\n".join(out) + "\n"


def exit_status(records) -> int:
    return 1 if any(r["status"] == "fail" for r in records) else 0
