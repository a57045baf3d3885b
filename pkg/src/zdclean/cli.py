"""Command-line front end: analyze, classes, decomp, verify, battery, iso."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import battery, classes, cleanness, structure
from .expr import eval_expr, eval_group, eval_with_group, parse_group
from .iso import find_isomorphism
from .ring import DEFAULT_CAP, FiniteRing, RingError


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _element(R: FiniteRing, token: str) -> int:
    """An element given by index or by label."""
    if token.lstrip("-").isdigit():
        x = int(token)
        if not 0 <= x < R.order:
            raise UsageError(f"element {x} outside ring of order {R.order}")
        return x
    try:
        return R.index_of(token)
    except (KeyError, ValueError):
        raise UsageError(f"no element labelled {token!r} in {R.provenance}") from None


def _rows(pairs) -> str:
    width = max((len(k) for k, _ in pairs), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def cmd_analyze(args, out) -> int:
    R = eval_expr(args.expr, args.cap)
    prof = classes.basic_profile(R)
    sc = structure.classify(R)
    mod_j = structure.classify_mod_j(R)
    preds = cleanness.all_ring_predicates(R)
    if args.json:
        record = {
            "ring": R.provenance,
            "order": R.order,
            "profile": prof.as_dict(),
            "classify": sc.sorted_tags(),
            "classify_mod_j": mod_j.sorted_tags(),
            "predicates": {m: v.holds for m, v in preds.items()},
            "counterexamples": {m: v.counterexample for m, v in preds.items() if not v.holds},
        }
        # flat copies of the most used flags, for grep-friendly consumers
        record.update({m: v.holds for m, v in preds.items()})
        record.update(prof.as_dict())
        print(_dump(record), file=out)
        return 0
    pairs = [("ring", R.provenance), ("order", R.order)]
    pairs += [(k, v) for k, v in prof.as_dict().items()]
    pairs += [("classify", ", ".join(sc.sorted_tags())),
              ("classify mod J", ", ".join(mod_j.sorted_tags()))]
    for mode, v in preds.items():
        note = "" if v.holds else f"  (fails at {R.labels[v.counterexample]})"
        pairs.append((mode, f"{v.holds}{note}"))
    print(_rows(pairs), file=out)
    return 0


def cmd_classes(args, out) -> int:
    R = eval_expr(args.expr, args.cap)
    s = classes.compute_class(R, args.set)
    if args.json:
        print(_dump({"ring": R.provenance, "role": s.role, "members": list(s.members),
                     "labels": s.labels(), "aux": list(s.aux)}), file=out)
    else:
        print(f"{s.role} of {R.provenance} ({len(s)} of {R.order})", file=out)
        for i, x in enumerate(s.members):
            extra = f"  [{s.aux[i]}]" if s.aux else ""
            print(f"  {x}: {R.labels[x]}{extra}", file=out)
    return 0


def cmd_decomp(args, out) -> int:
    R = eval_expr(args.expr, args.cap)
    a = _element(R, args.element)
    decs = cleanness.decompositions(R, a, args.flavor)
    if args.json:
        print(_dump({"ring": R.provenance, "element": a, "flavor": args.flavor,
                     "decompositions": [d.as_dict(R) for d in decs]}), file=out)
    else:
        print(f"{R.labels[a]} in {R.provenance}: {len(decs)} {args.flavor} decomposition(s)", file=out)
        for d in decs:
            print(f"  e={R.labels[d.very_idempotent]} w={R.labels[d.nilpotent]} "
                  f"e^2={R.labels[d.square]} sign={d.sign} nil_index={d.nil_index}", file=out)
    return 0


def _print_verdicts(verdicts, out, as_json: bool, timing: bool = False) -> None:
    if as_json:
        for v in verdicts:
            print(_dump(v.as_record(timing)), file=out)
        return
    for v in verdicts:
        if v.status == "skipped":
            print(f"{v.result_id:<10} {v.ring:<20} skipped ({v.reason})", file=out)
        else:
            extra = "".join(f" {k}={val}" for k, val in sorted(v.extra.items()))
            print(f"{v.result_id:<10} {v.ring:<20} {v.kind:<11} lhs={v.lhs!s:<5} rhs={v.rhs!s:<5}"
                  f"{extra} {v.status}", file=out)
            if v.status == "inconsistent":
                print(f"  witnesses: {_dump(v.witnesses)}", file=out)


def cmd_verify(args, out) -> int:
    if args.result_id not in battery.REGISTRY:
        raise UsageError(f"unknown result id {args.result_id!r}; known: {', '.join(battery.RESULT_IDS)}")
    R, gr = eval_with_group(args.expr, args.cap)
    if args.group is not None:
        group = eval_group(parse_group(args.group))
        verdict = battery.check_result(args.result_id, R, group, args.cap)
    else:
        verdict = battery.evaluate(battery.REGISTRY[args.result_id], battery.inputs_for(R, gr))
    _print_verdicts([verdict], out, args.json)
    return 1 if verdict.status == "inconsistent" else 0


def cmd_battery(args, out) -> int:
    if args.corpus is not None:
        try:
            text = Path(args.corpus).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read corpus {args.corpus}: {exc}") from None
        corpus = battery.parse_corpus(text)
    else:
        corpus = None
    ids = None
    if args.results:
        ids = [r.strip() for r in args.results.split(",") if r.strip()]
        unknown = [r for r in ids if r not in battery.REGISTRY]
        if unknown:
            raise UsageError(f"unknown result ids: {', '.join(unknown)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = battery.run_battery(corpus, ids, jobs=args.jobs, cap=args.cap)
    battery.print_errors(report)
    target = open(args.out, "w") if args.out else out
    try:
        if args.json:
            target.write(report.jsonl(args.timing))
        else:
            _print_verdicts(report.verdicts, target, False)
            counts = report.summary()
            print(" ".join(f"{k}={counts[k]}" for k in
                           ("rings", "consistent", "inconsistent", "skipped", "errors")), file=target)
    finally:
        if args.out:
            target.close()
    if args.json:
        print(_dump(report.summary()), file=sys.stderr)
    return report.exit_status()


def cmd_iso(args, out) -> int:
    R = eval_expr(args.left, args.cap)
    S = eval_expr(args.right, args.cap)
    phi = find_isomorphism(R, S)
    if args.json:
        print(_dump({"left": R.provenance, "right": S.provenance, "isomorphic": phi is not None,
                     "map": None if phi is None else phi.as_list()}), file=out)
    elif phi is None:
        print(f"{R.provenance} and {S.provenance} are not isomorphic", file=out)
    else:
        print(f"{R.provenance} -> {S.provenance}", file=out)
        for x, y in enumerate(phi.as_list()):
            print(f"  {x} -> {y}    {R.labels[x]} -> {S.labels[y]}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"ring size cap (default {DEFAULT_CAP})")

    p = argparse.ArgumentParser(prog="zdclean", parents=[common],
                                description="Finite-ring cleanness toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="profile, classification and predicates")
    a.add_argument("expr")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classes", parents=[common], help="one element class")
    c.add_argument("expr")
    c.add_argument("--set", required=True, choices=classes.ROLES)
    c.set_defaults(func=cmd_classes)

    d = sub.add_parser("decomp", parents=[common], help="decompositions of one element")
    d.add_argument("expr")
    d.add_argument("element", help="element index or label")
    d.add_argument("--flavor", default="weakly_nil_clean", choices=cleanness.FLAVORS)
    d.set_defaults(func=cmd_decomp)

    v = sub.add_parser("verify", parents=[common], help="check one result on one ring")
    v.add_argument("result_id")
    v.add_argument("expr")
    v.add_argument("group", nargs="?")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("battery", parents=[common], help="run results over a corpus")
    b.add_argument("--corpus", help="file with one expression per line")
    b.add_argument("--results", help="comma-separated result ids")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", help="write the report here instead of stdout")
    b.add_argument("--timing", action="store_true", help="fill in elapsed seconds")
    b.set_defaults(func=cmd_battery)

    i = sub.add_parser("iso", parents=[common], help="search for a ring isomorphism")
    i.add_argument("left")
    i.add_argument("right")
    i.set_defaults(func=cmd_iso)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.json = getattr(args, "json", False)
    args.cap = getattr(args, "cap", DEFAULT_CAP)
    if args.cap < 1:
        print("zdclean: --cap must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, RingError, ValueError, KeyError, IndexError) as exc:
        print(f"zdclean: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
