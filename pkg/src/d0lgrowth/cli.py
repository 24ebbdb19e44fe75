"""Command-line entry point.

Exit codes: 0 member / success / pass, 1 not a member or verification
failure, 2 bad usage, unparsable input or an internal search/expansion
limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .d0l import ExpansionTooLarge, growth_table
from .parser import ParseError, parse_polynomial
from .polynomial import Member, SearchCapExceeded, decide_membership, evaluate
from .serialize import report_to_json, report_to_text, verdict_to_json, verdict_to_text
from .synthesizer import NotInF, synthesize_general
from .verifier import Method, verify_growth

DEFAULT_N_MAX = 10

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cmd_decide(args) -> int:
    F = parse_polynomial(args.expr)
    verdict = decide_membership(F)
    if args.json:
        print(json.dumps({"polynomial": str(F), **verdict_to_json(verdict)}))
    else:
        print(verdict_to_text(verdict))
    return EXIT_OK if isinstance(verdict, Member) else EXIT_NEGATIVE


def _cmd_synth(args) -> int:
    F = parse_polynomial(args.expr)
    report = synthesize_general(F)
    if args.format == "json":
        text = json.dumps(report_to_json(report), indent=2)
    else:
        text = report_to_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    F = parse_polynomial(args.expr)
    report = synthesize_general(F)
    outcome = verify_growth(report.system, F, args.n_max, Method(args.method))
    print(outcome)
    return EXIT_OK if outcome.passed else EXIT_NEGATIVE


def _cmd_trace(args) -> int:
    F = parse_polynomial(args.expr)
    report = synthesize_general(F)
    rows = [("n", "|σⁿ(axiom)|", "F(n)", "match")]
    all_match = True
    for n, length in growth_table(report.system, args.n_max).entries:
        expected = evaluate(F, n)
        ok = expected == length
        all_match &= ok
        rows.append((str(n), str(length), str(expected), "✓" if ok else "✗"))
    widths = [max(len(row[c]) for row in rows) for c in range(4)]
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK if all_match else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="d0lgrowth",
        description="Decide membership and synthesize D0L-systems with polynomial growth.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("decide", help="does F map every n >= 0 to a positive integer?")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("synth", help="build a D0L-system with growth function F")
    p.add_argument("expr")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("verify", help="synthesize, then check growth against F")
    p.add_argument("expr")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.MATRIX.value)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("trace", help="table of growth lengths next to F(n)")
    p.add_argument("expr")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.set_defaults(func=_cmd_trace)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n_max", 0) < 0:
        print("error: --n-max must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInF as exc:
        print(verdict_to_text(exc.verdict))
        return EXIT_NEGATIVE
    except (SearchCapExceeded, ExpansionTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
