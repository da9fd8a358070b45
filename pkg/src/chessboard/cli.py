"""Command-line front end: ``chessboard <subcommand> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
CHESSBOARD_THREADS caps the worker count used for table generation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import cubic, dirac, enveloping, graded, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def thread_cap():
    raw = os.environ.get("CHESSBOARD_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CHESSBOARD_THREADS must be an integer, got {raw!r}") from None
    return max(1, value)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_table(args):
    if args.n not in (2, 3):
        raise UsageError("--n must be 2 or 3")
    table = cubic.mult_table(args.n, args.law, workers=thread_cap())
    _write(table.to_csv() if args.format == "csv" else table.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args):
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    print(f"seed: {args.seed}", file=sys.stderr)
    report = verify.run(args.suite, args.seed)
    _write(_dump(report), args.output)
    for suite in report["suites"]:
        for c in suite["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            print(f"[{mark}] {suite['suite']}: {c['name']}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def flat_report():
    sols = graded.enumerate_symmetric_flat()
    return {"condition": "(alpha+1)(beta+1)(gamma+1) = 1",
            "solutions": [{"alpha": a.to_json(), "beta": b.to_json(), "gamma": c.to_json(),
                           "text": [str(a), str(b), str(c)],
                           "flat": graded.flat_condition(a, b, c)} for a, b, c in sols]}


def cmd_flat(args):
    report = flat_report()
    _write(_dump(report), args.output)
    return EXIT_OK if all(s["flat"] for s in report["solutions"]) else EXIT_FAIL


def cmd_bracket_search(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.depth < 2 or (args.max_words is not None and args.max_words < 1):
        raise UsageError("--depth must be at least 2 and --max-words positive")
    words = None
    if args.depth > 2 or args.max_words is not None:
        # deeper nestings are a bounded exploration, not an exhaustive search
        words = enveloping.enumerate_nested_brackets(args.depth, args.arity, args.max_words)
    cert = enveloping.double_bracket_identity_search(args.n, arity=args.arity, seed=args.seed, words=words)
    out = cert.to_json()
    out["seed"] = args.seed
    out["depth"] = args.depth
    _write(_dump(out), args.output)
    return EXIT_OK


def parse_grid(text):
    try:
        lo, hi, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--grid must look like lo:hi:step, got {text!r}") from None
    if step <= 0 or hi < lo or not all(map(_finite, (lo, hi, step))):
        raise UsageError("--grid needs finite bounds with lo <= hi and step > 0")
    return lo, hi, step


def _finite(x):
    return x == x and abs(x) != float("inf")


def cmd_dispersion(args):
    lo, hi, step = parse_grid(args.grid)
    rows = dirac.sample_dispersion(args.m, lo, hi, step)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k_x", "k_y", "k_z", "m", "omega"])
    for row in rows:
        w.writerow([repr(float(x)) for x in row])
    _write(buf.getvalue(), args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="chessboard", description="Ternary algebras, Z3-graded calculus and the cubic Dirac equation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="full ternary multiplication table of basis units")
    t.add_argument("--n", type=int, default=2)
    t.add_argument("--law", choices=cubic.LAWS, default="star")
    t.add_argument("--format", choices=("json", "csv"), default="csv")
    t.add_argument("--output", "-o")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all", *verify.SUITES))
    v.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    v.add_argument("--output", "-o")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("flat", help="enumerate the symmetric flat connections")
    f.add_argument("--output", "-o")
    f.set_defaults(func=cmd_flat)

    b = sub.add_parser("bracket-search", help="identities among double j-brackets")
    b.add_argument("--n", type=int, default=2, help="matrix dimension")
    b.add_argument("--arity", type=int, choices=(2, 3), default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--depth", type=int, default=2, help="number of nested brackets (3 gives 7-entity words)")
    b.add_argument("--max-words", type=int, help="stop enumerating after this many classes")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_bracket_search)

    d = sub.add_parser("dispersion", help="sample the cubic dispersion surface")
    d.add_argument("--m", type=float, default=1.0)
    d.add_argument("--grid", default="-2:2:0.5")
    d.add_argument("--output", "-o")
    d.set_defaults(func=cmd_dispersion)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chessboard: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"chessboard: {exc}", file=sys.stderr)
        return EXIT_FAIL
