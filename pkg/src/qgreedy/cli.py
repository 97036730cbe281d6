"""Command-line front end.

Four subcommands wrap the library: expand (run a generator), check (test an
admissibility condition), recover (base from an expansion of 1), and relate
(greedy vs quasi-greedy, with the decreasing family between them).  Output
is deterministic plain text, or JSON with a fixed field order under --json.

Exit codes: 0 ok, 1 negative check verdict, 2 parse error, 3 precondition
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .admissible import (AdmissibilityReport, check_alpha_self,
                         check_beta_self, check_greedy_vs_alpha,
                         check_quasi_vs_alpha)
from .expand import greedy_expand, quasi_greedy_expand
from .recover import base_from_alpha, base_from_beta
from .relate import enumerate_between
from .scalar import (ALGEBRAIC, BaseSpec, DomainError, ParseError, RATIONAL,
                     UNIT, make_base, parse_rational, to_decimal)
from .sequence import DigitSeq, format_seq, parse_seq

OK, NEGATIVE, PARSE_FAILURE, PRECONDITION = 0, 1, 2, 3


def _parse_bound(text: str) -> int | None:
    s = text.strip().lower()
    if s in ("inf", "∞"):
        return None
    try:
        value = int(s)
    except ValueError:
        raise ParseError(f"M must be a positive integer or 'inf', got {text!r}") from None
    if value < 1:
        raise ParseError("M must be a positive integer or 'inf'")
    return value


def _bound_json(bound):
    return "inf" if bound is None else bound


def _base_json(base: BaseSpec) -> dict:
    if base.kind == ALGEBRAIC:
        lo, hi = base._given
        return {"kind": base.kind,
                "poly": [int(c) for c in reversed(base.poly)],
                "interval": [str(lo), str(hi)]}
    return {"kind": base.kind, "value": str(base.value)}


def _decimal_line(label: str, element, digits: int) -> str:
    s = to_decimal(element, digits)
    if s.startswith("≈"):
        return f"{label} ≈ {s[1:]}"
    return f"{label} = {s}"


def cmd_expand(args) -> int:
    base = make_base(args.base)
    bound = _parse_bound(args.M)
    x_frac = parse_rational(args.x)
    x = base.from_rational(x_frac)
    run = quasi_greedy_expand if args.mode == "quasi" else greedy_expand
    result = run(base, bound, x, max_digits=args.digits,
                 detect_cycle=not args.no_cycle_detect)
    if args.json:
        payload = {
            "mode": result.mode,
            "base": _base_json(base),
            "M": _bound_json(bound),
            "x": str(x_frac),
            "digits": list(result.digits.digits),
            "closed_form": (format_seq(result.closed_form)
                            if result.closed_form else None),
            "remainder": str(result.remainders[-1]),
        }
        print(json.dumps(payload))
        return OK
    print(f"digits: {result.digits}")
    if result.closed_form is not None:
        print(f"closed_form: {format_seq(result.closed_form)}")
    print(f"remainder: {result.remainders[-1]}")
    print(_decimal_line("x", x, 10))
    return OK


_CONDITIONS = {
    "alpha": (check_alpha_self, False),
    "beta": (check_beta_self, False),
    "quasi-vs-alpha": (check_quasi_vs_alpha, True),
    "greedy-vs-alpha": (check_greedy_vs_alpha, True),
}


def cmd_check(args) -> int:
    checker, needs_alpha = _CONDITIONS[args.condition]
    bound = _parse_bound(args.M)
    seq = parse_seq(args.seq, bound)
    if needs_alpha:
        if args.alpha is None:
            raise ParseError(f"--alpha is required for condition {args.condition}")
        alpha = parse_seq(args.alpha, bound)
        report: AdmissibilityReport = checker(seq, alpha, bound)
    else:
        report = checker(seq, bound)
    if args.json:
        witness = None
        if report.witness is not None:
            witness = {
                "n": report.witness.index,
                "tail": (format_seq(report.witness.tail)
                         if report.witness.tail is not None else None),
                "reference": (format_seq(report.witness.reference)
                              if report.witness.reference is not None else None),
                "message": report.witness.message,
            }
        payload = {
            "condition": report.condition,
            "M": _bound_json(bound),
            "seq": format_seq(seq),
            "alpha": format_seq(alpha) if needs_alpha else None,
            "verdict": report.verdict,
            "witness": witness,
        }
        print(json.dumps(payload))
        return OK if report.verdict else NEGATIVE
    if report.verdict:
        print("verdict: admissible")
        return OK
    print("verdict: not admissible")
    w = report.witness
    print(f"violation: {w.message}")
    if w.index is not None:
        print(f"tail: {format_seq(w.tail)}")
        print(f"reference: {format_seq(w.reference)}")
    return NEGATIVE


def cmd_recover(args) -> int:
    bound = _parse_bound(args.M)
    seq = parse_seq(args.seq, bound)
    recover = base_from_beta if args.source == "beta" else base_from_alpha
    base = recover(seq, bound)
    if args.json:
        payload = {
            "from": args.source,
            "M": _bound_json(bound),
            "seq": format_seq(seq),
            "base": _base_json(base),
            "decimal": (None if base.kind == UNIT
                        else to_decimal(base.q, args.decimals)),
        }
        print(json.dumps(payload))
        return OK
    if base.kind == UNIT:
        print("q = 1 (convention)")
        return OK
    if base.kind == RATIONAL:
        print(f"q = {base.value}")
        return OK
    poly = ",".join(str(c) for c in reversed(base.poly))
    print(f"poly: {poly}  {_decimal_line('q', base.q, args.decimals)}")
    lo, hi = base._given
    print(f"interval: ({lo}, {hi})")
    return OK


def _closed_or_prefix(result) -> str:
    if result.closed_form is not None:
        return format_seq(result.closed_form)
    return f"{result.digits} (prefix, no cycle detected)"


def cmd_relate(args) -> int:
    base = make_base(args.base)
    bound = _parse_bound(args.M)
    x = base.from_rational(parse_rational(args.x))
    greedy = greedy_expand(base, bound, x, max_digits=args.digits)
    quasi = None
    if x > 0:
        quasi = quasi_greedy_expand(base, bound, x, max_digits=args.digits)
    family = None
    if args.enumerate is not None:
        family = enumerate_between(base, bound, x, args.enumerate)
    coincide = (greedy.closed_form is not None and quasi is not None
                and greedy.closed_form == quasi.closed_form)
    if args.json:
        payload = {
            "base": _base_json(base),
            "M": _bound_json(bound),
            "x": args.x.strip(),
            "greedy": (format_seq(greedy.closed_form)
                       if greedy.closed_form else None),
            "quasi": (format_seq(quasi.closed_form)
                      if quasi is not None and quasi.closed_form else None),
            "expansions": ([format_seq(s) for s in family]
                           if family is not None else None),
        }
        print(json.dumps(payload))
        return OK
    print(f"greedy: {_closed_or_prefix(greedy)}")
    if quasi is not None:
        print(f"quasi: {_closed_or_prefix(quasi)}")
    if coincide:
        print("expansions coincide")
    if family is not None:
        print("expansions:")
        for s in family:
            print(f"  {format_seq(s)}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgreedy",
        description="Exact greedy and quasi-greedy expansions in non-integer bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="run a digit generator")
    p.add_argument("--mode", choices=["greedy", "quasi"], required=True)
    p.add_argument("--base", required=True, help="base literal, e.g. 2, 3/2, 1.8, root(1,-1,-1;1.5,1.7)")
    p.add_argument("--M", required=True, help="largest digit, or 'inf'")
    p.add_argument("--x", required=True, help="value to expand (rational literal)")
    p.add_argument("--digits", type=int, default=64)
    p.add_argument("--no-cycle-detect", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("check", help="test an admissibility condition")
    p.add_argument("--condition", choices=sorted(_CONDITIONS), required=True)
    p.add_argument("--seq", required=True, help="sequence literal, e.g. 110(), (10)")
    p.add_argument("--alpha", help="reference sequence for the vs-alpha conditions")
    p.add_argument("--M", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("recover", help="recover the base from an expansion of 1")
    p.add_argument("--from", dest="source", choices=["alpha", "beta"], required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--M", required=True)
    p.add_argument("--decimals", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_recover)

    p = sub.add_parser("relate", help="compare greedy and quasi-greedy expansions")
    p.add_argument("--base", required=True)
    p.add_argument("--M", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--enumerate", type=int, default=None,
                   help="list this many expansions below the greedy one")
    p.add_argument("--digits", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_relate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_FAILURE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
