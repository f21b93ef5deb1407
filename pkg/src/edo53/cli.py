"""Command-line surface: tables, naming, chains, layouts, and file export.

Every command is deterministic for a given argv and writes results to
stdout only (diagnostics go to stderr).  Exit codes: 0 success, 2 usage
error (unknown flags, ids, or out-of-domain values), 1 validation failure.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import approx, export, fifths, layouts, pitch


def _print_temperaments(rows, fmt):
    if fmt == "csv":
        sys.stdout.write(export.emit_table_csv(rows, kind="temperaments"))
    else:
        print(f"{'q':>5}  {'p':>4}  {'p/q':>12}  {'cents':>14}  {'deviation':>14}")
        for r in rows:
            print(f"{r.q:>5}  {r.p:>4}  {r.fifth_height:>12.10f}  "
                  f"{r.fifth_cents:>14.8f}  {r.delta_cents:>+14.8f}")
    if any(r.q == 29 for r in rows):
        print("note: " + approx.ERRATA["fifth-table-q29-sign"], file=sys.stderr)
    return 0


def _cmd_temperaments(args):
    q_list = None
    if args.q is not None:
        q_list = [int(part) for part in args.q.split(",") if part.strip()]
    return _print_temperaments(approx.fifth_table(q_list), args.format)


def _cmd_overtones(args):
    rows = approx.overtone_table(args.q)
    if args.format == "csv":
        sys.stdout.write(export.emit_table_csv(rows, kind="overtones"))
    else:
        print(f"{'label':<18} {'ratio':>6}  {'mantissa':>14}  {'step':>5}  {'deviation':>12}")
        for r in rows:
            ratio = str(r.ratio.numerator) if r.ratio.denominator == 1 else str(r.ratio)
            print(f"{r.label:<18} {ratio:>6}  {r.mantissa_cents:>14.8f}  "
                  f"{r.nearest:>5}  {r.deviation_cents:>+12.6f}")
    if args.q == 53:
        print("note: " + approx.ERRATA["overtone-k15-mantissa"], file=sys.stderr)
    return 0


def _cmd_cf(args):
    ratio = Fraction(args.ratio)
    height = pitch.height_of_ratio(ratio)
    terms = approx.continued_fraction(height, args.terms)
    print(f"ratio {ratio}  height {height:.10f}")
    if len(terms) > 1:
        print(f"terms [{terms[0]}; " + ", ".join(str(t) for t in terms[1:]) + "]")
    else:
        print(f"terms [{terms[0]}]")
    print("convergents: " + " ".join(f"{p}/{q}" for p, q in approx.convergents(terms)))
    semis = approx.semiconvergents(terms)
    if semis:
        print("semiconvergents: " + " ".join(f"{p}/{q}" for p, q in semis))
    return 0


def _cmd_next_better(args):
    results = approx.next_better_division(args.after, args.max)
    for q, p, delta in results:
        print(f"q={q} p={p} delta={delta:+.8f}")
    if not results:
        print(f"no division in {args.after + 1}..{args.max} beats q={args.after}")
    if args.after == 53 and any(q == 359 for q, _, _ in results):
        print("note: " + approx.ERRATA["next-better-359-claim"], file=sys.stderr)
    return 0


def _cmd_name(args):
    names = fifths.names_of_step(args.step, args.max_acc)
    print("=".join(name.render() for name in names))
    return 0


def _cmd_step(args):
    name = fifths.NoteName.parse(args.name)
    print(fifths.step_of_fifth(fifths.fifth_of_spelling(name)))
    return 0


def _cmd_circle(args):
    print(f"{'f':>5}  {'step':>4}  name")
    for f in range(args.f_from, args.f_to + 1):
        print(f"{f:>5}  {fifths.step_of_fifth(f):>4}  {fifths.spelling_of_fifth(f).render()}")
    return 0


def _overtone_step_set() -> set[int]:
    return {(row.nearest - 1) % 53 + 1 for row in approx.overtone_table(53)}


def _cmd_chain(args):
    segment = fifths.pythagorean_chain(args.start, args.count)
    print(f"fifths {segment.f_start}..{segment.f_start + segment.count - 1} ({segment.count} steps)")
    print("steps: " + " ".join(str(s) for s in segment.steps))
    missing = sorted(_overtone_step_set() - set(segment.steps))
    if missing:
        print("note: covers all overtone steps except " + ", ".join(str(s) for s in missing))
    else:
        print("note: covers all overtone steps")
    return 0


def _cmd_layout(args):
    if args.action == "list":
        for vid in layouts.VARIANT_IDS:
            print(vid)
        return 0
    layout = layouts.load_variant(args.id)
    if args.action == "validate":
        problems = layouts.validate(layout)
        if problems:
            for problem in problems:
                print(problem)
            return 1
        print("ok")
        return 0
    if args.action == "show":
        q = layout.system.divisions
        print(f"{layout.id}: {q}-EDO, {len(layout.keys)} keys on {len(layout.manuals)} manuals")
        for manual in reversed(layout.manuals):  # upper manual printed on top
            print(f"{manual}:")
            for row in reversed(layouts.ROWS):
                keys = sorted((k for k in layout.keys if k.manual == manual and k.row == row),
                              key=lambda k: k.x)
                if keys:
                    print(f"  {row:<5} " + " ".join(str(k.step) for k in keys))
        return 0
    # export
    if args.format == "json":
        text = export.emit_layout_json(layout)
    else:
        text = export.emit_layout_csv(layout)
    with open(args.out, "w", newline="") as handle:
        handle.write(text)
    return 0


def _cmd_scl(args):
    description = args.description or f"{args.q}-tone equal temperament"
    text = export.emit_scl(args.q, description)
    with open(args.out, "w", newline="") as handle:
        handle.write(text)
    return 0


def _cmd_freq(args):
    hz = pitch.frequency_of_step(args.base, args.q, args.step, args.octave)
    print(f"{hz:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edo53",
        description="53-tone (and other) equal temperament toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("temperaments", help="fifth approximation table per division")
    p.add_argument("--q", help="comma-separated division counts (default: the classic 12 rows)")
    p.add_argument("--format", choices=("pretty", "csv"), default="pretty")
    p.set_defaults(func=_cmd_temperaments)

    p = sub.add_parser("overtones", help="harmonic deviation table")
    p.add_argument("--q", type=int, default=53)
    p.add_argument("--format", choices=("pretty", "csv"), default="pretty")
    p.set_defaults(func=_cmd_overtones)

    p = sub.add_parser("cf", help="continued fraction of a ratio's height")
    p.add_argument("--ratio", required=True, help="frequency ratio, e.g. 3/2")
    p.add_argument("--terms", type=int, default=12)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("next-better", help="divisions whose fifth beats a reference division")
    p.add_argument("--after", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_next_better)

    p = sub.add_parser("name", help="spell a step on the circle of fifths")
    p.add_argument("--step", type=int, required=True)
    p.add_argument("--max-acc", type=int, default=4)
    p.set_defaults(func=_cmd_name)

    p = sub.add_parser("step", help="step index of a note name")
    p.add_argument("--name", required=True)
    p.set_defaults(func=_cmd_step)

    p = sub.add_parser("circle", help="chain-of-fifths listing with spellings")
    p.add_argument("--from", dest="f_from", type=int, default=-26)
    p.add_argument("--to", dest="f_to", type=int, default=30)
    p.set_defaults(func=_cmd_circle)

    p = sub.add_parser("chain", help="Pythagorean chain segment and overtone coverage")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("layout", help="list, inspect, validate, or export keyboard layouts")
    layout_sub = p.add_subparsers(dest="action", required=True)
    layout_sub.add_parser("list").set_defaults(func=_cmd_layout)
    for action in ("show", "validate"):
        sp = layout_sub.add_parser(action)
        sp.add_argument("id")
        sp.set_defaults(func=_cmd_layout)
    sp = layout_sub.add_parser("export")
    sp.add_argument("id")
    sp.add_argument("--format", choices=("json", "csv"), required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=_cmd_layout)

    p = sub.add_parser("scl", help="write a Scala tuning file for q-EDO")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--description")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_scl)

    p = sub.add_parser("freq", help="frequency of a step")
    p.add_argument("--base", type=float, required=True)
    p.add_argument("--step", type=int, required=True)
    p.add_argument("--octave", type=int, default=0)
    p.add_argument("--q", type=int, default=53)
    p.set_defaults(func=_cmd_freq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except layouts.LayoutDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
