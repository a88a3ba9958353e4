"""Command-line interface.

Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds as B
from .code_core import (
    Code,
    CodeError,
    SystematicCode,
    check_systematic,
    code_to_json,
    format_code,
    parse_code,
)
from .constructions import (
    cyclic_code,
    levenshtein_19_16_10,
    simplex_15_4_8,
    systematic_counterexample_34,
)
from .search import compute_S, default_budget
from .tables import FORMATS, TableSpec, build_table, render
from . import transforms as T

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep message format
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, ...]:
    """'3', '1-4', '1..4' or '1,2,7' -> sorted tuple of ints."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            sep = ".." if ".." in part else "-" if "-" in part[1:] else None
            if sep:
                lo, hi = part.split(sep, 1)
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return tuple(sorted(out))


def _read_input(path: str) -> Code:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_code(text)


def _emit_code(code: Code, fmt: str, output: str | None) -> None:
    text = code_to_json(code) + "\n" if fmt == "json" else format_code(code)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------


def cmd_bounds(args) -> int:
    kw = {"k": args.k} if args.k is not None else {"M": args.M}
    reports = B.all_bounds(args.q, args.d, setting=args.setting, **kw)
    k = args.k if args.k is not None else B.ilog(args.q, args.M)
    M = args.q**k if args.k is not None else args.M
    verdict = B.classify_family(args.q, k, args.d, args.setting)
    print(f"parameters: q={args.q} k={k} M={M} d={args.d} setting={args.setting}")
    theorem = f" via {verdict.theorem}" if verdict.theorem else ""
    print(f"griesmer family: {verdict.holds.value}{theorem}")
    if verdict.condition:
        print(f"  {verdict.condition}")
    width = max(len(r.source.value) for r in reports)
    for r in reports:
        status = "applies" if r.applicable else "does NOT apply"
        print(f"{r.source.value:<{width}}  {r.value:>5}  {status} ({r.condition})")
    best = B.best_lower_bound(args.q, args.d, setting=args.setting, **kw)[0]
    print(f"best applicable lower bound: {best.value} ({best.source.value})")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        code = _read_input(args.file)
    except (OSError, CodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if code.M < 2:
        print("error: distance is undefined for a code with fewer than two words", file=sys.stderr)
        return EXIT_USAGE
    d = code.d
    print(f"code: q={code.q} n={code.n} M={code.M} d={d}")
    k = args.k
    if k is None:
        k = B.ilog(code.q, code.M)
        exact = code.q**k == code.M
    else:
        exact = True
    if exact:
        check = check_systematic(code, k)
        if check:
            sys_text = f"systematic (k={k})"
        else:
            detail = f" {check.message}" if check.message is not None else ""
            sys_text = f"NOT systematic (k={k}: {check.reason}{detail})"
    else:
        check = None
        sys_text = f"NOT systematic (M={code.M} is not a power of {code.q})"
    failed = False
    if k < 1:
        print(f"{sys_text}, d={d}, n={code.n}: no Griesmer comparison for k=0")
    else:
        g = B.griesmer(code.q, k, d)
        if code.n < g:
            rel, verdict = "<", "VIOLATES Griesmer"
        elif code.n == g:
            rel, verdict = "=", "MEETS Griesmer"
        else:
            rel, verdict = ">", "EXCEEDS Griesmer"
        print(f"{sys_text}, d={d}, n={code.n} {rel} g={g}: {verdict}")
        if args.expect_violation and code.n >= g:
            failed = True
            print("check failed: expected a Griesmer violation", file=sys.stderr)
    if args.expect_d is not None and d != args.expect_d:
        failed = True
        print(f"check failed: expected d={args.expect_d}, got {d}", file=sys.stderr)
    if args.expect_systematic and not check:
        failed = True
        print("check failed: expected a systematic code", file=sys.stderr)
    return EXIT_CHECK if failed else EXIT_OK


def cmd_table(args) -> int:
    ds = parse_range(args.d)
    if args.M is not None:
        spec_cols, by_M = parse_range(args.M), True
    else:
        spec_cols, by_M = parse_range(args.k), False
    try:
        spec = TableSpec(args.q, spec_cols, ds, args.setting, args.format, by_M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = render(spec, build_table(spec))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.name == "cyclic":
        if args.n is None or args.defset is None:
            raise UsageError("cyclic needs --n and --defset")
        defset = parse_range(args.defset) if args.defset.strip() else ()
        try:
            code = cyclic_code(args.n, defset)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        code = {
            "simplex15": simplex_15_4_8,
            "levenshtein-19-16-10": levenshtein_19_16_10,
            "counterexample-34": systematic_counterexample_34,
        }[args.name]()
    _emit_code(code, args.format, args.output)
    return EXIT_OK


def cmd_transform(args) -> int:
    try:
        code = _read_input(args.file)
        op = args.op
        if op == "puncture":
            out = T.puncture(code, args.i)
        elif op == "shorten":
            out = T.shorten_systematic(SystematicCode.from_code(code, args.k), args.i)
        elif op == "reduce":
            out = T.reduce_distance(SystematicCode.from_code(code, args.k), args.d)
        elif op == "parity":
            out = T.extend_parity(code)
        elif op == "repeat":
            out = T.repeat(code, args.t)
        elif op == "concat":
            other = _read_input(args.other)
            pairing = range(code.M) if args.pairing == "listed" else None
            out = T.concat_paired(code, other, pairing)
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(op)
    except (OSError, CodeError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit_code(out, args.format, args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.q < 2 or args.k < 1 or args.d < 1:
        raise UsageError("need q >= 2, k >= 1, d >= 1")
    if args.q != 2 and args.k >= 3:
        raise UsageError("q > 2 is only supported for k <= 2")
    budget = args.budget if args.budget is not None else default_budget()
    t0 = time.monotonic()
    outcome = compute_S(
        args.q, args.k, args.d, budget, max_n=args.max_n, use_bounds=not args.no_bounds, workers=args.workers
    )
    print(json.dumps(outcome.to_dict(), indent=2))
    print(f"elapsed: {round((time.monotonic() - t0) * 1000)} ms", file=sys.stderr)
    if outcome.witness is not None:
        text = format_code(outcome.witness)
        if args.witness_out:
            Path(args.witness_out).write_text(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sysgriesmer", description="Griesmer-type bounds and explicit codes for systematic codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", help="all length lower bounds for (q, k or M, d)")
    b.add_argument("--q", type=int, default=2)
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--M", type=int)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--setting", choices=B.SETTINGS, default=B.SYSTEMATIC)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="parameters, systematicity and Griesmer comparison of a code file")
    v.add_argument("file", help="code file, '-' for stdin")
    v.add_argument("--k", type=int)
    v.add_argument("--expect-d", type=int)
    v.add_argument("--expect-systematic", action="store_true")
    v.add_argument("--expect-violation", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="grid of best lower bounds")
    t.add_argument("--q", type=int, default=2)
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", help="dimension range, e.g. 1-4")
    g.add_argument("--M", help="word-count range (nonlinear setting)")
    t.add_argument("--d", required=True, help="distance range, e.g. 1-20")
    t.add_argument("--setting", choices=B.SETTINGS, default=B.SYSTEMATIC)
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("construct", help="write an explicit code")
    c.add_argument("name", choices=["simplex15", "levenshtein-19-16-10", "counterexample-34", "cyclic"])
    c.add_argument("--n", type=int)
    c.add_argument("--defset", help="comma-separated defining set")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    tr = sub.add_parser("transform", help="apply a code transformation")
    ops = tr.add_subparsers(dest="op", required=True, parser_class=_Parser)

    def op(name, help_):
        s = ops.add_parser(name, help=help_)
        s.add_argument("file", help="code file, '-' for stdin")
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.add_argument("-o", "--output")
        return s

    op("puncture", "delete a coordinate").add_argument("--i", type=int, required=True)
    s = op("shorten", "shorten at a systematic coordinate")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s = op("reduce", "puncture check coordinates down to a target distance")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    op("parity", "append an overall parity bit")
    op("repeat", "repeat every word t times").add_argument("--t", type=int, required=True)
    s = op("concat", "concatenate word-by-word with a second code")
    s.add_argument("other")
    s.add_argument("--pairing", choices=["sorted", "listed"], default="sorted")
    tr.set_defaults(func=cmd_transform)

    se = sub.add_parser("search", help="exact S_q(k,d) by exhaustive search")
    se.add_argument("--q", type=int, default=2)
    se.add_argument("--k", type=int, required=True)
    se.add_argument("--d", type=int, required=True)
    se.add_argument("--budget", type=float, help="seconds (default: $SYSGRIESMER_BUDGET or unlimited)")
    se.add_argument("--max-n", type=int)
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--no-bounds", action="store_true", help="start at n=k instead of the best lower bound")
    se.add_argument("--witness-out")
    se.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
