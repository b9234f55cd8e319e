"""Command-line front end.

    exitpath shuffle-table --k 3
    exitpath flat-sharp-table --k 5
    exitpath build-exit --span point-cone --max-dim 6 --stats
    exitpath verify-identities --span s0-defect --max-dim 4
    exitpath verify-qcat --span boundary-collar --max-dim 3
    exitpath check-fibration --span broken --max-dim 2 --kind right
    exitpath check-mono --span trivial --max-dim 4
    exitpath examples list
    exitpath stats --span broken --max-dim 3

--span takes a gallery name or a path to a .span document.  Exit
status: 0 all checks passed, 1 a check failed, 2 input error, 3 a
search budget was exhausted (fail wins over exhaustion when both
happen).  Output is deterministic; --format machine emits json with
sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .construction import LinkedSpan, build_exit, exit_simplices
from .documents import ParseError, parse_span_file, print_sset, write_span_documents
from .gallery import GALLERY, load_span
from .shuffles import (
    UndefinedFlat,
    collapse,
    exit_shuffle,
    flat,
    sharp,
)
from .verify import check_fibration, verify_quasicategory, verify_simplicial_identities

PASS, FAIL, INPUT_ERROR, EXHAUSTED = 0, 1, 2, 3
DEFAULT_BUDGET = 100000


def _resolve_span(ref: str) -> LinkedSpan:
    if ref in GALLERY:
        return load_span(ref)
    if os.path.exists(ref):
        return parse_span_file(ref)
    raise ValueError(f"--span {ref!r} is neither a gallery name nor a file; "
                     f"gallery: {', '.join(sorted(GALLERY))}")


def _report_status(report) -> int:
    if report.failed:
        return FAIL
    if report.inconclusive:
        return EXHAUSTED
    return PASS


def _emit_report(report, fmt: str) -> int:
    print(report.to_json() if fmt == "machine" else report.to_text())
    return _report_status(report)


def cmd_shuffle_table(args) -> int:
    k = args.k
    rows = []
    for j in range(1, k + 1):
        S = exit_shuffle(k, j)
        C = collapse(k, j)
        rows.append({
            "j": j,
            "shuffle": [list(p) for p in S.points],
            "collapse_low": list(C.low.values),
            "collapse_high": list(C.high.values),
        })
    if args.format == "machine":
        print(json.dumps({"k": k, "tables": rows}, sort_keys=True, indent=2))
        return PASS
    print(f"exit shuffles and collapses, k = {k}")
    for row in rows:
        pts = " ".join(f"{i}->({lv},{pos})" for i, (lv, pos) in enumerate(row["shuffle"]))
        print(f"S_{row['j']}: {pts}")
        low = " ".join(f"(0,{i})->{v}" for i, v in enumerate(row["collapse_low"]))
        high = " ".join(f"(1,{i})->{v}" for i, v in enumerate(row["collapse_high"]))
        print(f"C_{row['j']}: {low} | {high}")
    return PASS


def cmd_flat_sharp_table(args) -> int:
    k = args.k
    flats = {}
    sharps = {}
    for j in range(1, k + 1):
        frow = []
        for i in range(k + 1):
            try:
                frow.append(flat(k, j, i))
            except UndefinedFlat:
                frow.append(None)
        flats[j] = frow
        sharps[j] = [sharp(k, j, i) for i in range(k + 1)]
    if args.format == "machine":
        print(json.dumps({"k": k,
                          "flat": {str(j): v for j, v in flats.items()},
                          "sharp": {str(j): v for j, v in sharps.items()}},
                         sort_keys=True, indent=2))
        return PASS

    def table(name, data):
        print(f"{name}(k={k}, j, i); rows j = 1..{k}, columns i = 0..{k}")
        print("j\\i " + " ".join(f"{i:>2d}" for i in range(k + 1)))
        for j in range(1, k + 1):
            cells = " ".join(" -" if v is None else f"{v:>2d}" for v in data[j])
            print(f"{j:>3d} {cells}")

    table("flat", flats)
    table("sharp", sharps)
    return PASS


def _budget(args):
    return args.budget if args.budget is not None else DEFAULT_BUDGET


def cmd_build_exit(args) -> int:
    span = _resolve_span(args.span)
    span.require_iota(args.max_dim)
    ex = build_exit(span, args.max_dim)
    doc = print_sset(ex)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    if args.stats:
        return _print_stats(span, ex, args)
    if args.format == "machine":
        print(json.dumps({"name": ex.name, "document": doc}, sort_keys=True, indent=2))
    elif not args.out:
        print(doc, end="")
    else:
        print(f"wrote {args.out}")
    return PASS


def _print_stats(span, ex, args) -> int:
    rows = []
    for k in range(args.max_dim + 1):
        rows.append({
            "degree": k,
            "low": span.M.count_at(k),
            "exit": len(exit_simplices(span, k)) if k >= 1 else 0,
            "upper": span.N.count_at(k),
            "total": ex.count_at(k),
            "generators": len(ex.gens.get(k, [])),
        })
    if args.format == "machine":
        print(json.dumps({"span": span.name, "max_dim": args.max_dim, "degrees": rows},
                         sort_keys=True, indent=2))
        return PASS
    print(f"exit complex of {span.name}, degrees 0..{args.max_dim}")
    print("degree  low  exit  upper  total  generators")
    for r in rows:
        print(f"{r['degree']:>6d} {r['low']:>4d} {r['exit']:>5d} {r['upper']:>6d} "
              f"{r['total']:>6d} {r['generators']:>11d}")
    return PASS


def cmd_stats(args) -> int:
    span = _resolve_span(args.span)
    span.require_iota(args.max_dim)
    ex = build_exit(span, args.max_dim)
    return _print_stats(span, ex, args)


def cmd_verify_identities(args) -> int:
    span = _resolve_span(args.span)
    span.require_iota(args.max_dim)
    ex = build_exit(span, args.max_dim)
    return _emit_report(verify_simplicial_identities(ex, args.max_dim), args.format)


def cmd_verify_qcat(args) -> int:
    span = _resolve_span(args.span)
    span.require_iota(args.max_dim)
    ex = build_exit(span, args.max_dim)
    report = verify_quasicategory(ex, args.max_dim, budget=_budget(args),
                                  workers=args.workers)
    return _emit_report(report, args.format)


def cmd_check_fibration(args) -> int:
    span = _resolve_span(args.span)
    report = check_fibration(span.pi, args.max_dim, kind=args.kind,
                             budget=_budget(args), workers=args.workers)
    return _emit_report(report, args.format)


def cmd_check_mono(args) -> int:
    span = _resolve_span(args.span)
    ok, witness = span.iota.is_mono(args.max_dim)
    if args.format == "machine":
        print(json.dumps({"map": span.iota.name, "mono_through": args.max_dim,
                          "ok": ok, "witness": witness}, sort_keys=True, indent=2))
    else:
        verdict = "PASS" if ok else "FAIL"
        print(f"{verdict}: {span.iota.name} levelwise injective through "
              f"degree {args.max_dim}" + (f"  [{witness}]" if witness else ""))
    return PASS if ok else FAIL


def cmd_examples(args) -> int:
    if args.action == "list":
        if args.format == "machine":
            print(json.dumps({name: e.summary for name, e in GALLERY.items()},
                             sort_keys=True, indent=2))
        else:
            for name in sorted(GALLERY):
                print(f"{name:<16s} {GALLERY[name].summary}")
        return PASS
    # emit
    name = args.name
    if name not in GALLERY:
        raise ValueError(f"unknown example {name!r}; gallery: {', '.join(sorted(GALLERY))}")
    span = load_span(name)
    path = write_span_documents(span, args.dir)
    print(f"wrote {path}")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exitpath",
        description="exit-path simplicial sets of linked spans: build and verify")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, span=True, budget=False, workers=False):
        p.add_argument("--format", choices=["text", "machine"], default="text",
                       help="output style; machine is json with sorted keys")
        if span:
            p.add_argument("--span", required=True,
                           help="gallery name or path to a .span document")
            p.add_argument("--max-dim", type=int, default=3,
                           help="degree bound for the check (default 3)")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help=f"search nodes allowed per horn subproblem "
                                f"(default {DEFAULT_BUDGET})")
        if workers:
            p.add_argument("--workers", type=int, default=1,
                           help="thread count; results are identical for any value")

    p = sub.add_parser("shuffle-table", help="print exit shuffles and collapses")
    p.add_argument("--k", type=int, required=True)
    common(p, span=False)
    p.set_defaults(fn=cmd_shuffle_table)

    p = sub.add_parser("flat-sharp-table", help="print the flat/sharp index tables")
    p.add_argument("--k", type=int, required=True)
    common(p, span=False)
    p.set_defaults(fn=cmd_flat_sharp_table)

    p = sub.add_parser("build-exit", help="materialize the exit complex")
    common(p)
    p.add_argument("--stats", action="store_true", help="print per-degree counts")
    p.add_argument("--out", help="write the sset document here")
    p.set_defaults(fn=cmd_build_exit)

    p = sub.add_parser("verify-identities",
                       help="simplicial identities on the exit complex")
    common(p)
    p.set_defaults(fn=cmd_verify_identities)

    p = sub.add_parser("verify-qcat", help="inner-horn filling on the exit complex")
    common(p, budget=True, workers=True)
    p.set_defaults(fn=cmd_verify_qcat)

    p = sub.add_parser("check-fibration", help="horn-lifting checks for pi")
    common(p, budget=True, workers=True)
    p.add_argument("--kind", choices=["right", "inner", "kan"], default="right")
    p.set_defaults(fn=cmd_check_fibration)

    p = sub.add_parser("check-mono", help="levelwise injectivity of iota")
    common(p)
    p.set_defaults(fn=cmd_check_mono)

    p = sub.add_parser("examples", help="list or emit the gallery spans")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?", help="span to emit")
    p.add_argument("--dir", default=".", help="directory for emitted documents")
    common(p, span=False)
    p.set_defaults(fn=cmd_examples)

    p = sub.add_parser("stats", help="per-degree counts of the exit complex")
    common(p)
    p.set_defaults(fn=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
