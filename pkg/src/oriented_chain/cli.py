"""Command-line driver.

Exit status: 0 on success, 1 when a verification finds mismatches, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import census as cen
from . import orientation as ori
from .chainseq import ascent_count, descent_count
from .ptrans import MonoidLabel, parse_ptrans

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"3..6"`` or ``"3,5,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None


def _labels_for(n: int) -> list[MonoidLabel]:
    return [lab for lab in MonoidLabel if not (lab is MonoidLabel.DPC and n < 3)]


def cmd_classify(args, out) -> int:
    try:
        alpha = parse_ptrans(args.transformation)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    values = alpha.values
    membership = {str(lab): ori.is_member(alpha, lab) for lab in _labels_for(alpha.n)}
    info = {
        "width": alpha.width,
        "rank": alpha.rank,
        "image_sequence": "(" + ",".join(map(str, values)) + ")",
        "descents": descent_count(values),
        "ascents": ascent_count(values),
    }
    if args.format == "json":
        payload = {"schema": cen.SCHEMA_VERSION, "input": str(alpha), **info,
                   "membership": membership}
        print(json.dumps(payload, sort_keys=True), file=out)
    elif args.format == "csv":
        print("label,member", file=out)
        for lab, m in membership.items():
            print(f"{lab},{str(m).lower()}", file=out)
    else:
        print(str(alpha), file=out)
        for k, v in info.items():
            print(f"{k}: {v}", file=out)
        for lab, m in membership.items():
            print(f"{lab}: {str(m).lower()}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    status = EXIT_OK
    for n in args.n_range:
        report = cen.verify_theorem(args.theorem_id, n, args.witness_cap, args.jobs, args.bounds)
        if report.mismatches:
            status = EXIT_MISMATCH
        if args.format == "json":
            print(report.to_json(), file=out)
        elif args.format == "csv":
            print(f"{report.theorem_id},{n},{report.instances_checked},{report.mismatches}",
                  file=out)
        else:
            verdict = "ok" if report.verified else "FAILED"
            print(f"{report.theorem_id} n={n}: {report.instances_checked} instances, "
                  f"{report.mismatches} mismatches [{verdict}]", file=out)
            for w in report.witnesses:
                print(f"  witness {cen.witness_text(w)}", file=out)
    return status


def cmd_census(args, out) -> int:
    labels = args.labels or list(MonoidLabel)
    records = cen.census(args.n_range, labels, args.jobs, args.bounds)
    if args.format == "json":
        payload = {"schema": cen.SCHEMA_VERSION,
                   "records": [{"n": r.n, "label": str(r.label), "count": r.count}
                               for r in records]}
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        out.write(cen.census_csv(records))
    return EXIT_OK


def cmd_counterexample(args, out) -> int:
    cap = args.cap if args.cap is not None else args.witness_cap
    witnesses = cen.find_counterexamples(args.theorem_id, args.n, cap, args.jobs, args.bounds)
    if args.format == "json":
        print(json.dumps({"schema": cen.SCHEMA_VERSION, "theorem_id": args.theorem_id,
                          "n": args.n, "witnesses": [cen.witness_text(w) for w in witnesses]},
                         sort_keys=True), file=out)
    else:
        for w in witnesses:
            print(cen.witness_text(w), file=out)
    if not witnesses:
        print(f"no counterexamples to {args.theorem_id} at n={args.n}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    """Time the descent scan against the local width tests over one universe."""
    print("n,universe,size,scan_seconds,local_seconds", file=out)
    for n in args.n_range:
        items = list(cen.enumerate_universe(n, args.universe, bounds=args.bounds))
        t0 = time.perf_counter()
        for a in items:
            ori.is_pop(a)
            ori.is_por(a)
        t1 = time.perf_counter()
        for a in items:
            ori.decide_pop_local(a)
            ori.decide_por_local(a)
        t2 = time.perf_counter()
        print(f"{n},{args.universe},{len(items)},{t1 - t0:.6f},{t2 - t1:.6f}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-n", type=int, default=None,
                        help="override every enumeration bound")
    common.add_argument("--witness-cap", type=int, default=cen.DEFAULT_WITNESS_CAP)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(
        prog="oriented-chain",
        description="Oriented transformations on a finite chain.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="membership table for one map")
    p.add_argument("transformation", help='e.g. "n=4; [1,2,1,2]" or "n=5; {1:2, 3:5}"')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check a theorem")
    p.add_argument("theorem_id")
    p.add_argument("n_range", type=parse_range)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="count members of each monoid")
    p.add_argument("n_range", type=parse_range)
    p.add_argument("labels", nargs="*", type=MonoidLabel)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("counterexample", parents=[common], help="list failing instances")
    p.add_argument("theorem_id")
    p.add_argument("n", type=int)
    p.add_argument("cap", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("bench", parents=[common], help="time scan vs local tests")
    p.add_argument("n_range", type=parse_range)
    p.add_argument("--universe", choices=cen.UNIVERSES, default="PT")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.bounds = cen.Bounds.from_env(args.max_n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if hasattr(args, "theorem_id") and args.theorem_id not in cen.CATALOG:
        print(f"error: unknown theorem id {args.theorem_id!r}", file=sys.stderr)
        print("known ids: " + " ".join(cen.CATALOG), file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
