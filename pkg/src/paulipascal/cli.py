"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .graded import Mode
from .hyperpyramid import LayerSpec, any_layer
from . import render, sequences as seq, summation, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

RANGE_FLAGS = ("--rows", "--range", "--n", "--at")

SEQUENCE_KINDS = ("fib", "jacobsthal", "fib-k", "pauli-fib", "pauli-jacobsthal", "pauli-fib-k")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _mode(text: str) -> Mode:
    try:
        return Mode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-3..-1" for an option; bind it to its flag explicitly
    out = []
    it = iter(argv)
    for token in it:
        if token in RANGE_FLAGS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json", "svg"), default=None)
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    parser = argparse.ArgumentParser(
        prog="paulipascal",
        description="Pascal and Pauli Pascal triangles, pyramids and the sequences living on them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", parents=[common], help="rows of a (Pauli) Pascal triangle")
    tri.add_argument("--mode", type=_mode, default=Mode.COMMUTATIVE, help="plain or pauli")
    tri.add_argument("--rows", type=parse_range, required=True, help="row or range a..b")
    tri.add_argument("--dominant", type=int, help="dominant generator for negative rows (1 or 2)")
    tri.add_argument("--truncation", type=int, help="correction order for negative rows")

    pyr = sub.add_parser("pyramid", parents=[common], help="one layer of a (Pauli) Pascal pyramid")
    pyr.add_argument("--mode", type=_mode, default=Mode.COMMUTATIVE)
    pyr.add_argument("--n", type=int, required=True)
    pyr.add_argument("--dominant", type=int)
    pyr.add_argument("--truncation", type=int)

    sq = sub.add_parser("sequence", parents=[common], help="table of sequence values")
    sq.add_argument("--kind", choices=SEQUENCE_KINDS, required=True)
    sq.add_argument("--k", type=int, default=None, help="order for fib-k and pauli-fib-k")
    sq.add_argument("--range", type=parse_range, required=True, dest="indices")

    ver = sub.add_parser("verify", parents=[common], help="run cross-oracle verification suites")
    ver.add_argument("suite", choices=(*verify.SUITES, "all"))

    sm = sub.add_parser("sum", parents=[common], help="value of a divergent series from its generating function")
    sm.add_argument("gf", help='terms "x^s/(1-r*x)^m" joined by "+"')
    sm.add_argument("--at", type=Fraction, default=Fraction(1), help="evaluation point (default 1)")
    return parser


def _negative_flags(args, n: int):
    if n >= 0:
        if args.dominant is not None or args.truncation is not None:
            raise UsageError("--dominant/--truncation only apply to negative exponents")
        return None, None
    if args.dominant is None or args.truncation is None:
        raise UsageError("negative exponents need both --dominant and --truncation")
    return args.dominant, args.truncation


def cmd_triangle(args) -> str:
    fmt = args.format or "text"
    tables = []
    for n in args.rows:
        dom, trunc = _negative_flags(args, n)
        tables.append(any_layer(LayerSpec(2, n, args.mode, dom, trunc)))
    rows = [render.row_cells(t) for t in tables]
    if fmt == "text":
        return render.rows_to_text(rows)
    if fmt == "csv":
        return render.rows_to_csv(rows)
    if fmt == "json":
        return render.tables_to_json(tables)
    return render.svg_rows(rows, f"{args.mode.value} triangle rows {args.rows.start}..{args.rows.stop - 1}")


def cmd_pyramid(args) -> str:
    fmt = args.format or "text"
    dom, trunc = _negative_flags(args, args.n)
    table = any_layer(LayerSpec(3, args.n, args.mode, dom, trunc))
    grid = render.layer_grid(table)
    if fmt == "text":
        return render.rows_to_text(grid)
    if fmt == "csv":
        return render.rows_to_csv(grid)
    if fmt == "json":
        return render.tables_to_json([table])
    return render.svg_rows(grid, f"{args.mode.value} pyramid layer n={args.n}")


def _sequence_funcs(kind: str, k: int | None):
    if kind in ("fib-k", "pauli-fib-k"):
        if k is None or k < 1:
            raise UsageError(f"--kind {kind} needs --k >= 1")
    elif k is not None:
        raise UsageError(f"--k does not apply to --kind {kind}")
    order = {"fib": 1, "jacobsthal": 2, "pauli-fib": 1, "pauli-jacobsthal": 2}.get(kind, k)
    if kind.startswith("pauli"):
        closed = {
            "pauli-fib": seq.pauli_fib_closed,
            "pauli-jacobsthal": seq.pauli_jacobsthal_closed,
        }.get(kind, lambda n: seq.pauli_fib_k_split(n, order))
        return (lambda n: seq.pauli_fib_k(n, order)), closed
    return (lambda n: seq.fib_k(n, order)), (lambda n: seq.binet_float(n, order))


SEQ_COLUMNS = ("n", "exact_num", "exact_den", "closed_form_float", "abs_error")


def sequence_rows(kind: str, k: int | None, indices) -> list[tuple]:
    exact, closed = _sequence_funcs(kind, k)
    rows = []
    for n in indices:
        value = exact(n)
        approx = closed(n)
        rows.append((n, value.numerator, value.denominator, approx, abs(approx - float(value))))
    return rows


def _g12(x: float) -> str:
    return format(x, ".12g")


def cmd_sequence(args) -> str:
    fmt = args.format or "csv"
    if fmt == "svg":
        raise UsageError("SVG output is only available for triangles and pyramid layers")
    rows = sequence_rows(args.kind, args.k, args.indices)
    if fmt == "json":
        records = [
            {"n": n, "exact_num": num, "exact_den": den, "closed_form_float": _g12(c), "abs_error": _g12(e)}
            for n, num, den, c, e in rows
        ]
        return json.dumps(records, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SEQ_COLUMNS)
        for n, num, den, c, e in rows:
            writer.writerow([n, num, den, _g12(c), _g12(e)])
        return buf.getvalue()
    lines = [f"{n:>5}  {render.fmt(Fraction(num, den)):>14}  {_g12(c):>20}  {_g12(e)}" for n, num, den, c, e in rows]
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    checks = verify.run(names, seed=args.seed)
    text = "".join(c.line() + "\n" for c in checks)
    return text, EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def cmd_sum(args) -> str:
    try:
        gf = summation.parse_gf(args.gf)
        return render.fmt(summation.abel_sum(gf, args.at)) + "\n"
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"paulipascal: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    status = EXIT_OK
    try:
        if args.command == "triangle":
            text = cmd_triangle(args)
        elif args.command == "pyramid":
            text = cmd_pyramid(args)
        elif args.command == "sequence":
            text = cmd_sequence(args)
        elif args.command == "verify":
            text, status = cmd_verify(args)
        else:
            text = cmd_sum(args)
    except (UsageError, ValueError) as exc:
        print(f"paulipascal: {exc}", file=sys.stderr)
        return EXIT_USAGE
    io_status = _emit(text, args.out)
    return io_status or status


if __name__ == "__main__":
    sys.exit(main())
