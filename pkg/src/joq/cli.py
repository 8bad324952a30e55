"""Command-line front end: ``joq seq | quat | table | gf | verify``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .core import OffsetTriple, gaussian, norm_closed, norm_direct, qk, qm
from .quaternion import ConsistencyError
from .scalars import render_rational
from .sequences import SEQUENCE_NAMES, SeqTable
from .series import gf_numerator, gf_series_check
from .verify import REGISTRY, SuiteConfig, run_suite


def _triple(text: str) -> OffsetTriple:
    try:
        return OffsetTriple.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _triples(text: str) -> tuple[OffsetTriple, ...]:
    return tuple(_triple(part) for part in text.split(";") if part.strip())


def _check_names(text: str) -> tuple[str, ...]:
    names = tuple(sorted({n.strip() for n in text.split(",") if n.strip()}))
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(sorted(REGISTRY))}"
        )
    return names


def _offsets(args: argparse.Namespace, parser: argparse.ArgumentParser) -> OffsetTriple:
    if args.abc is not None:
        return args.abc
    if None in (args.a, args.b, args.c):
        parser.error("give --abc a,b,c or all of --a, --b, --c")
    return OffsetTriple(args.a, args.b, args.c)


def _add_offset_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--abc", type=_triple, help="offset triple as a,b,c")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="joq",
        description="Exact modified third-order Jacobsthal numbers and unrestricted quaternions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="tabulate K, M, X or J3")
    p.add_argument("name", choices=SEQUENCE_NAMES)
    p.add_argument("--from", dest="lo", type=int, default=0)
    p.add_argument("--to", dest="hi", type=int, default=10)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("quat", help="evaluate one quaternion, norm or Gaussian number")
    p.add_argument("--n", type=int, required=True)
    _add_offset_args(p)
    p.add_argument("--what", choices=("qk", "qm", "norm", "gaussian"), default="qk")
    p.add_argument(
        "--variant",
        choices=("direct", "corrected", "paper"),
        default="direct",
        help="norm evaluation route (only with --what norm)",
    )

    p = sub.add_parser("table", help="tabulate QK_n (or QM_n) components over a range of n")
    _add_offset_args(p)
    p.add_argument("--from", dest="lo", type=int, default=0)
    p.add_argument("--to", dest="hi", type=int, default=10)
    p.add_argument("--what", choices=("qk", "qm"), default="qk")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("gf", help="generating-function numerator and series check")
    _add_offset_args(p)
    p.add_argument("--depth", type=int, default=16)

    p = sub.add_parser("verify", help="run the identity suites and print a JSON report")
    p.add_argument("--seed", type=int, default=SuiteConfig.seed)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--triples", type=_triples, help="explicit triples, e.g. '1,2,3;0,0,0'")
    p.add_argument("--checks", type=_check_names, help="comma-separated subset of checks")
    p.add_argument("--series-depth", type=int, default=SuiteConfig.series_depth)
    p.add_argument("--max-counterexamples", type=int, default=SuiteConfig.max_counterexamples)
    p.add_argument("--mutate", action="store_true", help="perturb one oracle value per check (negative control)")
    p.add_argument("--output", help="also write the report to this path")
    p.add_argument("--list-checks", action="store_true")
    return parser


def cmd_seq(args) -> int:
    table = SeqTable.build(args.name, args.lo, args.hi)
    sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_json())
    return 0


def cmd_quat(args, parser) -> int:
    if args.what == "gaussian":
        if args.a is None and args.abc is None:
            parser.error("--what gaussian needs --a (or --abc, whose first entry is used)")
        a = args.a if args.a is not None else args.abc.a
        print(gaussian(args.n, a))
        return 0
    t = _offsets(args, parser)
    if args.what == "qk":
        print(qk(args.n, t))
    elif args.what == "qm":
        print(qm(args.n, t))
    elif args.variant == "direct":
        print(render_rational(norm_direct(args.n, t)))
    else:
        print(render_rational(norm_closed(args.n, t, args.variant)))
    return 0


def cmd_table(args, parser) -> int:
    if args.lo > args.hi:
        parser.error(f"--from {args.lo} is greater than --to {args.hi}")
    t = _offsets(args, parser)
    f = qk if args.what == "qk" else qm
    rows = [(n, f(n, t)) for n in range(args.lo, args.hi + 1)]
    if args.format == "csv":
        print("n,r,i,j,k")
        for n, q in rows:
            print(",".join([str(n)] + [render_rational(c) for c in q]))
    else:
        payload = [
            {"n": n, **{name: render_rational(c) for name, c in zip("rijk", q)}} for n, q in rows
        ]
        print(json.dumps(payload, indent=2))
    return 0


def cmd_gf(args, parser) -> int:
    if args.depth < 3:
        parser.error("--depth must be at least 3")
    t = _offsets(args, parser)
    numerator = gf_numerator(t)
    coeffs = []
    for q in numerator.coeffs:
        try:
            coeffs.append(str(q.rationalize()))
        except ConsistencyError:
            coeffs.append(str(q))
    payload = {
        "offsets": str(t),
        "depth": args.depth,
        "denominator": "1 - x - x^2 - 2*x^3",
        "numerator_coeffs": coeffs,
        "check": gf_series_check(t, args.depth),
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(args, parser) -> int:
    if args.list_checks:
        print("\n".join(sorted(REGISTRY)))
        return 0
    try:
        cfg = SuiteConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            triples=args.triples,
            series_depth=args.series_depth,
            seed=args.seed,
            checks=args.checks,
            mutate=args.mutate,
            max_counterexamples=args.max_counterexamples,
        )
    except ValueError as exc:
        parser.error(str(exc))
    report = run_suite(cfg)
    text = report.dumps()
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if report.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "seq":
        if args.lo > args.hi:
            parser.error(f"--from {args.lo} is greater than --to {args.hi}")
        return cmd_seq(args)
    if args.command == "quat":
        return cmd_quat(args, parser)
    if args.command == "table":
        return cmd_table(args, parser)
    if args.command == "gf":
        return cmd_gf(args, parser)
    return cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
