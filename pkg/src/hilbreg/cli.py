"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 series not nonnegative,
3 no such presentation / invalid move / failed verification, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle
from .boundary import BoundaryPresentation, compute_presentation, reconstruct, render_grid
from .errors import (
    BudgetExceeded,
    HilbertError,
    InvalidMove,
    NoPresentation,
    NotNonnegative,
)
from .ingest import hilbert_numerator, parse_batch_lines, parse_ideal
from .invariants import admit, compute_invariants
from .polyseries import HilbertSeries, canonicalize, format_poly, parse_poly
from .presentations import (
    PositiveRepresentation,
    format_terms,
    min_height_presentation,
    min_width_presentation,
    to_positive_representation,
    verify_representation,
)

EXIT_CODES = {
    NotNonnegative: 2,
    NoPresentation: 3,
    InvalidMove: 3,
    BudgetExceeded: 4,
}


class UsageError(HilbertError):
    pass


def exit_code_for(exc: BaseException) -> int:
    for cls, code in EXIT_CODES.items():
        if isinstance(exc, cls):
            return code
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbreg",
        description="Hilbert depth and Hilbert regularity of Q(t)/(1-t)^d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def series_args(p):
        p.add_argument("--num", help="numerator, e.g. '2-5t+t^2+4t^3' or '[2,-5,1,4]' (stdin if omitted)")
        p.add_argument("--dim", type=int, required=True, help="exponent d of (1-t)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    def shape_args(p):
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--min-width", action="store_true", help="nonnegative (0, Hreg) presentation")
        p.add_argument("--min-height", action="store_true", help="nonnegative (Hdepth, e) presentation")

    p = sub.add_parser("invariants", help="Hdepth, Hprojdim, Hreg")
    series_args(p)
    p.add_argument("--budget", type=int, help="search budget for --oracle")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    for name, text in (("present", "boundary presentation"),
                       ("grid", "boundary presentation as an ASCII grid"),
                       ("decompose", "positive representation (Hilbert decomposition)")):
        p = sub.add_parser(name, help=text)
        series_args(p)
        shape_args(p)

    p = sub.add_parser("ingest", help="series from a monomial ideal or a JSON-lines batch")
    p.add_argument("--ideal", help="generators such as 'x1^2, x1*x2, x2^2'")
    p.add_argument("--nvars", type=int)
    p.add_argument("--input", help="JSON-lines batch file ('-' for stdin)")
    p.add_argument("--run-invariants", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check a presentation or representation against a series")
    series_args(p)
    p.add_argument("--input", required=True, help="JSON file emitted by present/decompose ('-' for stdin)")
    return parser


def read_series(args, stdin) -> HilbertSeries:
    text = args.num if args.num is not None else stdin.read()
    if args.dim < 0:
        raise UsageError("--dim must be nonnegative")
    return canonicalize(HilbertSeries(parse_poly(text), args.dim))


def choose_presentation(args, h: HilbertSeries) -> BoundaryPresentation:
    pair = args.n is not None or args.k is not None
    chosen = int(pair) + int(args.min_width) + int(args.min_height)
    if chosen > 1:
        raise UsageError("give exactly one of --n/--k, --min-width, --min-height")
    if pair:
        if args.n is None or args.k is None:
            raise UsageError("--n and --k must be given together")
        if not 0 <= args.n <= h.dim or args.k < 0:
            raise UsageError(f"need 0 <= n <= {h.dim} and k >= 0")
        return compute_presentation(h, args.n, args.k)
    if args.min_height:
        return min_height_presentation(admit(h))
    if args.min_width or args.command == "decompose":
        return min_width_presentation(admit(h))
    raise UsageError("give one of --n/--k, --min-width, --min-height")


def budget_for(args, h) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HILB_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HILB_BUDGET must be an integer, got {env!r}") from None
    return oracle.default_budget(h)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def report_text(rep) -> str:
    return "\n".join(f"{key}: {'none' if val is None else val}" for key, val in rep.items())


def presentation_text(p: BoundaryPresentation) -> str:
    head = f"({p.n},{p.k})-boundary presentation, corner {p.c}"
    terms = sorted(p.terms(), key=lambda t: (-t[0], t[1]))
    return f"{head}\nH = {format_terms(terms)}"


def cmd_invariants(args, stdin):
    h = admit(read_series(args, stdin))
    if args.oracle:
        budget = budget_for(args, h)
        out = {
            "dim": h.dim,
            "numerator": format_poly(h.numerator),
            "hdepth": oracle.brute_hdepth(h),
            "hreg": oracle.brute_hreg(h, budget),
        }
    else:
        out = compute_invariants(h).to_json()
    return dumps(out) if args.format == "json" else report_text(out)


def cmd_present(args, stdin):
    p = choose_presentation(args, read_series(args, stdin))
    if args.command == "grid":
        return dumps(p.to_json()) if args.format == "json" else render_grid(p)
    if args.command == "decompose":
        rep = to_positive_representation(p)
        return dumps(rep.to_json()) if args.format == "json" else f"H = {rep}"
    return dumps(p.to_json()) if args.format == "json" else presentation_text(p)


def cmd_ingest(args, stdin):
    if args.ideal is not None:
        if args.nvars is None:
            raise UsageError("--ideal needs --nvars")
        h = hilbert_numerator(parse_ideal(args.ideal, args.nvars))
        rec = {"numerator": format_poly(h.numerator), "dim": h.dim}
        if args.run_invariants:
            rec = compute_invariants(h).to_json()
        return dumps(rec) if args.format == "json" else report_text(rec)
    if args.input is None:
        raise UsageError("ingest needs --ideal or --input")
    if args.input == "-":
        lines = parse_batch_lines(stdin)
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                lines = parse_batch_lines(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    out = []
    for item in lines:
        rec = {"line": item.lineno}
        if item.ok:
            if args.run_invariants:
                try:
                    rec.update(compute_invariants(item.series).to_json())
                except HilbertError as exc:
                    rec.update(error=str(exc), error_type=type(exc).__name__)
            else:
                rec.update(numerator=format_poly(item.series.numerator), dim=item.series.dim)
        else:
            rec.update(error=item.error, error_type=item.error_type)
        out.append(dumps(rec))
    return "\n".join(out)


def cmd_verify(args, stdin):
    h = read_series(args, stdin if args.num is not None else _Empty())
    if args.input == "-":
        raw = stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc.msg}") from None
    if isinstance(obj, dict) and "terms" in obj:
        kind = "representation"
        valid = verify_representation(PositiveRepresentation.from_json(obj), h)
    else:
        kind = "presentation"
        p = BoundaryPresentation.from_json(obj)
        valid = reconstruct(p) == h
    out = {"kind": kind, "valid": valid}
    text = dumps(out) if args.format == "json" else f"{kind}: {'valid' if valid else 'INVALID'}"
    if not valid:
        raise _Invalid(text)
    return text


class _Empty:
    def read(self):
        raise UsageError("verify needs --num when the document is read from stdin")


class _Invalid(NoPresentation):
    pass


COMMANDS = {
    "invariants": cmd_invariants,
    "present": cmd_present,
    "grid": cmd_present,
    "decompose": cmd_present,
    "ingest": cmd_ingest,
    "verify": cmd_verify,
}


def run(argv, stdin=None) -> tuple[int, str]:
    """Execute one request; returns (exit code, output text)."""
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 1), ""
    try:
        return 0, COMMANDS[args.command](args, stdin)
    except _Invalid as exc:
        return 3, str(exc)
    except HilbertError as exc:
        return exit_code_for(exc), f"error: {exc}"


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        stream = sys.stderr if out.startswith("error:") else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
