"""Command-line interface: ``shufflealg {stat,shuffle,check,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import perm
from .errors import ShuffleAlgError
from .report import exit_status, to_jsonl, to_table
from .shuffle import distribution, shuffles
from .stats import format_value, parse_stat, to_json
from .suites import SUITES, compat_record, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("SHUFFLEALG_SEED")
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--out", metavar="FILE", help="also write JSON-lines records here")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=None,
                        help="relabeling seed (default: $SHUFFLEALG_SEED or 1)")

    ap = _Parser(prog="shufflealg", description="Shuffle-compatibility toolkit.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("stat", parents=[common], help="evaluate a statistic")
    p.add_argument("statistic")
    p.add_argument("permutation")

    p = sub.add_parser("shuffle", parents=[common], help="list shuffles of two permutations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--stat", dest="stat_name")

    p = sub.add_parser("check", parents=[common], help="shuffle-compatibility verdict")
    p.add_argument("statistic")
    p.add_argument("--max", dest="max_n", type=int, default=8)
    p.add_argument("--relabelings", type=int, default=3)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max", dest="max_n", type=int, default=None)
    return ap


def _emit(args, records, human: str, code: int) -> int:
    if args.format == "json":
        sys.stdout.write(to_jsonl(records))
    else:
        sys.stdout.write(human)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(to_jsonl(records))
    return code


def _cmd_stat(args) -> int:
    st = parse_stat(args.statistic)
    p = perm.parse(args.permutation)
    v = st(p)
    rec = {"suite": "stat", "check_id": f"stat/{st.name}/{perm.to_str(p)}",
           "params": {"st": st.name, "permutation": perm.to_str(p)},
           "status": "info", "witness": {"value": to_json(v)}}
    return _emit(args, [rec], format_value(v) + "\n", 0)


def _cmd_shuffle(args) -> int:
    p, s = perm.parse(args.first), perm.parse(args.second)
    tau = shuffles(p, s)
    witness = {"shuffles": [perm.to_str(t) for t in tau]}
    lines = [perm.to_str(t) for t in tau]
    if args.stat_name:
        d = distribution(args.stat_name, p, s)
        witness["distribution"] = [to_json(v) for v in d.entries]
        lines.append("{" + ",".join(format_value(v) for v in d.entries) + "}")
    rec = {"suite": "shuffle", "check_id": f"shuffle/{perm.to_str(p)}/{perm.to_str(s)}",
           "params": {"first": perm.to_str(p), "second": perm.to_str(s),
                      "stat": args.stat_name},
           "status": "info", "witness": witness}
    return _emit(args, [rec], "\n".join(lines) + "\n", 0)


def _cmd_check(args) -> int:
    st = parse_stat(args.statistic)
    if args.max_n < 2:
        raise ShuffleAlgError("--max must be at least 2")
    rec = compat_record(st, args.max_n, args.relabelings, args.seed, args.jobs)
    pr = rec["params"]
    lines = [f"{pr['st']}: {pr['verdict']} (m+n <= {pr['bound']}, "
             f"{pr['relabelings']} relabelings, seed {pr['seed']}; claim: {pr['claim']})"]
    w = rec["witness"]
    if w:
        for key in ("first", "second"):
            r = w[key]
            lines.append(f"  {r['J']} x {r['K']}: {perm.to_str(r['p'])} | {perm.to_str(r['s'])}"
                         f" [{r['label']}] -> {r['distribution_text']}")
    if rec["status"] == "warn":
        lines.append("  warning: claimed non-compatible but no counterexample in range")
    return _emit(args, [rec], "\n".join(lines) + "\n", exit_status([rec]))


def _cmd_verify(args) -> int:
    records = run_suite(args.suite, args.max_n, relabelings=3, seed=args.seed, jobs=args.jobs)
    title = f"verify {args.suite}" + ("" if args.max_n is None else f" --max {args.max_n}")
    code = exit_status(records)
    human = to_table(records, title)
    if code:
        first = next(r for r in records if r["status"] == "fail")
        human += f"first failure: {first['check_id']}\n"
    return _emit(args, records, human, code)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    try:
        return {"stat": _cmd_stat, "shuffle": _cmd_shuffle,
                "check": _cmd_check, "verify": _cmd_verify}[args.cmd](args)
    except ShuffleAlgError as exc:
        print(f"shufflealg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
