"""Command-line front end.

Exit codes: 0 decided/ran, 1 irrelevant (or a self-test violation),
2 usage or parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence

from .corpus import desk_spec, enumerate_parameters, load_spec, selftest_equivalence
from .dsl import ParseError, parse_parameter, parse_symbol, print_parameter
from .parameters import dimension, is_arthur_type, is_generic, nt_measure, sl2_type
from .partitions import is_close, transpose
from .relevance import ResourceLimitError, lambda_range, lambda_sum, verify_witness
from .report import analyze, encode_report

EXIT_OK = 0
EXIT_IRRELEVANT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _param(text: str, field: str = "none"):
    try:
        return parse_parameter(text, field)
    except ParseError as exc:
        d = exc.diagnostic
        raise UsageError(f"cannot parse {text!r}: {d}") from None


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def cmd_check(args) -> int:
    p = _param(args.pi, args.field)
    q = _param(args.sigma, args.field)
    if args.corank_one and dimension(p) != dimension(q) + 1:
        raise UsageError(
            f"--corank-one: dim(pi) = {dimension(p)} but dim(sigma) + 1 = {dimension(q) + 1}"
        )
    report = analyze(p, q)
    print("relevant" if report.relevant else "irrelevant")
    _emit(encode_report(report))
    if args.figure:
        from .figures import save_pair_figure

        save_pair_figure(report, args.figure)
    return EXIT_OK if report.relevant else EXIT_IRRELEVANT


def cmd_witness(args) -> int:
    p, q = _param(args.pi), _param(args.sigma)
    report = analyze(p, q)
    w = report.witness
    if w is None:
        print("irrelevant: no witness")
        return EXIT_IRRELEVANT
    assert verify_witness(p, q, w)
    if args.json:
        _emit(encode_report(report)["witness"])
        return EXIT_OK
    for i, ((eta, d), role) in enumerate(zip(p.instances(), w.assignment)):
        print(f"#{i}  {eta} x S{d}  ->  {role}")
    print(f"psi0 = {print_parameter(w.generic_remainder)}")
    return EXIT_OK


def cmd_lambda(args) -> int:
    p, q = _param(args.pi), _param(args.sigma)
    if (args.eta is None) != (args.a is None):
        raise UsageError("--eta and --a must be given together")
    if args.eta is not None:
        try:
            eta = parse_symbol(args.eta)
        except ParseError as exc:
            raise UsageError(f"cannot parse --eta {args.eta!r}: {exc.diagnostic}") from None
        if args.a < 1:
            raise UsageError("--a must be positive")
        print(f"Lambda({eta}, {args.a}; pi, sigma) = {lambda_sum(eta, args.a, p, q)}")
        print(f"Lambda({eta}, {args.a}; sigma, pi) = {lambda_sum(eta, args.a, q, p)}")
        return EXIT_OK
    symbols, top = lambda_range(p, q)
    print(f"a_max = {top}")
    for eta in symbols:
        for a in range(1, top + 1):
            print(
                f"{eta}\t{a}\t{lambda_sum(eta, a, p, q)}\t{lambda_sum(eta, a, q, p)}"
            )
    return EXIT_OK


def cmd_type(args) -> int:
    p = _param(args.p, args.field)
    lam = sl2_type(p)
    print(f"sl2_type: {lam}")
    print(f"associated_partition: {transpose(lam)}")
    print(f"nt: {nt_measure(p)}")
    print(f"dim: {dimension(p)}")
    print(f"generic: {str(is_generic(p)).lower()}")
    print(f"arthur_type: {str(is_arthur_type(p)).lower()}")
    if args.figure:
        from .figures import save_type_figure

        save_type_figure(p, lam, args.figure)
    return EXIT_OK


def cmd_close(args) -> int:
    p, q = _param(args.p), _param(args.q)
    lam, mu = sl2_type(p), sl2_type(q)
    print(f"{lam} {mu} {'close' if is_close(lam, mu) else 'not close'}")
    return EXIT_OK


def _spec(args):
    if args.spec is None:
        return desk_spec()
    try:
        return load_spec(args.spec)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"bad corpus spec {args.spec}: {exc}") from None


def cmd_enumerate(args) -> int:
    for p in enumerate_parameters(_spec(args)):
        print(print_parameter(p))
    return EXIT_OK


def cmd_selftest(args) -> int:
    summary = selftest_equivalence(_spec(args), workers=args.workers)
    _emit(summary.to_dict())
    print(f"elapsed: {summary.elapsed:.1f}s", file=sys.stderr)
    if args.figure:
        from .figures import save_selftest_figure

        save_selftest_figure(summary, args.figure)
    if not summary.ok:
        print(f"counterexample: {summary.first_counterexample}", file=sys.stderr)
        return EXIT_IRRELEVANT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glrelevance",
        description="Relevance of unitary parameters of general linear groups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    fields = ("none", "real", "complex")

    p = sub.add_parser("check", help="decide relevance and print a report")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--corank-one", action="store_true", help="require dim(pi) = dim(sigma) + 1")
    p.add_argument("--field", choices=fields, default="none")
    p.add_argument("--figure", metavar="PATH", help="also write the SL2-types as an image")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="print an I/J/K witness")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("lambda", help="alternating sums, full table or one query")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--eta", metavar="SYM")
    p.add_argument("--a", type=int)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("type", help="SL2-type, associated partition, NT, dim, flags")
    p.add_argument("p")
    p.add_argument("--field", choices=fields, default="none")
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("close", help="closeness of two SL2-types")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("enumerate", help="list a corpus, one parameter per line")
    p.add_argument("--spec", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", help="check brute force against the criterion on a corpus")
    p.add_argument("--spec", metavar="FILE")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
