"""Command-line front end, installed as ``qsc``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .checks import (
    CHECKS,
    DEFAULT_DEGREE_BOUND,
    min_q_degree_formula,
    min_q_degree_observed,
    verify_frame,
)
from .partitions import GrassmannFrame, Partition, frames_up_to, parse_partition
from .parsing import parse_expression
from .quantum import gw_invariant, reduce_to_basis
from .tables import export_table


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _frame(text: str) -> GrassmannFrame:
    try:
        l, n = (int(x) for x in text.split(","))
        return GrassmannFrame(l, n)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad frame {text!r}: expected l,n with 1 <= l < n ({exc})")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _frames(args) -> list[GrassmannFrame]:
    if args.gr is not None:
        return [args.gr]
    if args.max_n is not None:
        return frames_up_to(args.max_n, min_n=args.min_n)
    raise UsageError("give --gr l,n or --max-n N")


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_product(args) -> int:
    value = parse_expression(args.expression).evaluate(args.gr)
    _emit(args, value.to_text(), value.to_json())
    return 0


def cmd_reduce(args) -> int:
    value = reduce_to_basis(args.partition, args.gr)
    _emit(args, value.to_text(), value.to_json())
    return 0


def cmd_gw(args) -> int:
    lam, mu, nu = args.partitions
    value = gw_invariant(lam, mu, nu, args.deg, args.gr)
    payload = {
        "frame": {"l": args.gr.l, "n": args.gr.n},
        "partitions": [list(lam), list(mu), list(nu)],
        "d": args.deg,
        "value": value,
    }
    _emit(args, str(value), payload)
    return 0


def cmd_mindeg(args) -> int:
    lam, mu = args.partitions
    formula = min_q_degree_formula(lam, mu, args.gr)
    observed = min_q_degree_observed(lam, mu, args.gr)
    _emit(args, f"formula={formula} observed={observed}", {"formula": formula, "observed": observed})
    return 0


def _verify_one(job):
    frame, checks, seed, bound = job
    return verify_frame(frame, checks, sample_seed=seed, degree_bound=bound)


def cmd_verify(args) -> int:
    frames = _frames(args)
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECKS)})")
    jobs = [(f, checks, args.seed, args.degree_bound) for f in frames]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    failed = 0
    for reports in results:
        for rep in reports:
            failed += not rep.passed
            print(json.dumps(rep.to_json()) if args.json else rep.to_text())
    if not args.json:
        total = sum(len(r) for r in results)
        print(f"{total - failed}/{total} checks passed over {len(frames)} frame(s)")
    return 2 if failed else 0


def cmd_table(args) -> int:
    frames = _frames(args)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            count = export_table(frames, args.format, fh, full=args.full)
        print(f"wrote {count} records to {args.output}", file=sys.stderr)
    else:
        export_table(frames, args.format, sys.stdout, full=args.full)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qsc", description="Quantum Schubert calculus on Grassmannians Gr(l, n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def frame_opt(p, required=True):
        p.add_argument("--gr", type=_frame, required=required, metavar="L,N", help="Grassmannian Gr(l, n)")

    def json_opt(p):
        p.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = sub.add_parser("product", help="evaluate a product expression such as 's[2,1]*s[2,1]'")
    frame_opt(p)
    json_opt(p)
    p.add_argument("expression")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("reduce", help="rewrite s[lam] in the Schubert basis by rim-hook reduction")
    frame_opt(p)
    json_opt(p)
    p.add_argument("partition", type=_partition, help='e.g. "[4,2]"')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gw", help="three-point Gromov-Witten invariant")
    frame_opt(p)
    json_opt(p)
    p.add_argument("--deg", type=int, required=True, help="curve degree d")
    p.add_argument("partitions", type=_partition, nargs=3, metavar="PARTITION")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("mindeg", help="minimal q-degree in s[lam]*s[mu], by formula and by expansion")
    frame_opt(p)
    json_opt(p)
    p.add_argument("partitions", type=_partition, nargs=2, metavar="PARTITION")
    p.set_defaults(func=cmd_mindeg)

    def range_opts(p):
        frame_opt(p, required=False)
        p.add_argument("--max-n", type=int, help="all frames with min-n <= n <= max-n")
        p.add_argument("--min-n", type=int, default=2)

    p = sub.add_parser("verify", help="run theorem checks over frames")
    range_opts(p)
    json_opt(p)
    p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="export all structure constants of one or more frames")
    range_opts(p)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--full", action="store_true", help="include both orders of every pair")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"qsc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
