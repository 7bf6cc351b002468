"""Command-line front end.

    qtc compute  --method M (--a v | --abc v) [--format text|json|latex|csv]
    qtc verify   --n N --max K [--jobs J]
    qtc decompose --abc a,b,c [--format text|csv]
    qtc scan     --n N --max K [--monotone | --all]
    qtc rational --m M --n N

Exit codes: 0 success, 1 verification or positivity failure, 2 usage or
domain error.  QTC_JOBS sets the default worker count for verify and scan;
QTC_VERIFY_MAX sets the default sweep bound for verify.
"""

from __future__ import annotations

import argparse
import csv as csv_module
import io
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Sequence

from .chains import ChainRecord, area, decompose, f_chains, f_stat, stat
from .closed_forms import ABCParams, f3_recursive, f3_two_step, slope_sequence
from .errors import DomainError, NotPolynomialError
from .poly import LaurentPoly
from .render import RENDERERS
from .tableaux import f_tableaux
from .tesler import f_tesler
from .verification import default_jobs, run_verify


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DomainError(f"expected a comma-separated integer vector, got {text!r}")


def _compute(args) -> int:
    method = args.method
    if method in ("recursion", "two-step", "chains", "stat"):
        if args.abc is None:
            raise DomainError(f"--method {method} requires --abc a,b,c")
        vec = _parse_vector(args.abc)
        if len(vec) != 3:
            raise DomainError(f"--abc expects exactly three entries, got {vec}")
        p = ABCParams(*vec)
        fn = {
            "recursion": f3_recursive,
            "two-step": f3_two_step,
            "chains": f_chains,
            "stat": f_stat,
        }[method]
        poly = fn(p)
    else:
        if args.a is None:
            raise DomainError(f"--method {method} requires --a (for tesler, including a_1)")
        vec = _parse_vector(args.a)
        poly = f_tesler(vec) if method == "tesler" else f_tableaux(vec)
    print(RENDERERS[args.format](poly, vec))
    return 0


def _parse_n_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise DomainError(f"expected a length or a range like 2-4, got {text!r}")


def _verify(args) -> int:
    failures = 0
    for n in _parse_n_range(args.n):
        report = run_verify(n, args.max, args.jobs)
        print(report.to_text())
        failures += len(report.mismatches)
    return 0 if failures == 0 else 1


def _decompose_rows(chains: list[ChainRecord], p: ABCParams):
    for chain_id, ch in enumerate(chains, start=1):
        for role, part in (
            ("tail", ch.tail.partition()),
            ("pseudohead", ch.pseudohead.partition()),
            ("head", ch.head.partition()),
            ("quasihead", ch.quasihead.partition()),
        ):
            yield [chain_id, role, *part, p.total_weight - sum(part), ""]
        for member in ch.members:
            yield [chain_id, "member", *member, area(p, member), stat(p, member)]


def _decompose(args) -> int:
    vec = _parse_vector(args.abc)
    if len(vec) != 3:
        raise DomainError(f"--abc expects exactly three entries, got {vec}")
    p = ABCParams(*vec)
    chains = decompose(p)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv_module.writer(buf, lineterminator="\n")
        writer.writerow(["chain_id", "role", "x", "y", "z", "area", "stat"])
        writer.writerows(_decompose_rows(chains, p))
        print(buf.getvalue(), end="")
        return 0
    for chain_id, ch in enumerate(chains, start=1):
        r, R = ch.area_range
        print(
            f"chain {chain_id}: range [{r},{R}]  tail {ch.tail.partition()}  "
            f"pseudohead {ch.pseudohead.partition()}  head {ch.head.partition()}  "
            f"quasihead {ch.quasihead.partition()}"
        )
        for member in ch.members:
            mono = LaurentPoly.monomial(area(p, member), stat(p, member))
            print(f"  {member}  {mono.to_text()}")
    return 0


def _scan_vectors(n: int, maxval: int, monotone: bool):
    length = n - 1
    if monotone:
        def rec(prefix, cap):
            if len(prefix) == length:
                yield tuple(prefix)
                return
            for v in range(cap, -1, -1):
                prefix.append(v)
                yield from rec(prefix, v)
                prefix.pop()
        yield from rec([], maxval)
    else:
        yield from product(range(maxval + 1), repeat=length)


def _scan_worker(vec: tuple[int, ...]):
    poly = f_tableaux(vec)
    negatives = [((qe, te), c) for (qe, te), c in poly.sorted_terms() if c < 0]
    return vec, negatives


def _scan(args) -> int:
    if not 2 <= args.n <= 5:
        raise DomainError(f"scan supports n in 2..5, got {args.n}")
    monotone = not args.all
    vectors = list(_scan_vectors(args.n, args.max, monotone))
    jobs = default_jobs()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_worker, vectors, chunksize=16))
    else:
        results = [_scan_worker(vec) for vec in vectors]
    findings = [(vec, negatives) for vec, negatives in results if negatives]
    count = len(vectors)
    mode = "weakly decreasing" if monotone else "all"
    print(f"scanned {count} vectors (n={args.n}, entries <= {args.max}, {mode})")
    for vec, negatives in findings:
        negs = ", ".join(f"{c}*q^{qe}*t^{te}" for (qe, te), c in negatives)
        print(f"negative coefficients at {vec}: {negs}")
    if not findings:
        print("no negative coefficients found")
    return 1 if (monotone and findings) else 0


def _rational(args) -> int:
    seq = slope_sequence(args.m, args.n)
    poly = f_tableaux(seq[1:])
    print(f"slope sequence: {seq}")
    print(poly.to_text())
    if math.gcd(args.m, args.n) == 1 and poly.has_negative_coefficient():
        print("error: negative coefficient in a coprime rational case", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtc",
        description="Exact q,t-polynomials of integer sequences, computed by "
        "tableau sums, Tesler matrices, recursions, and symmetric chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate F(a_2, ..., a_n) by one method")
    c.add_argument(
        "--method",
        required=True,
        choices=["tableaux", "tesler", "recursion", "two-step", "chains", "stat"],
    )
    c.add_argument("--a", help="comma-separated vector; for tesler it includes a_1")
    c.add_argument("--abc", help="comma-separated triple for the n=4 methods")
    c.add_argument("--format", default="text", choices=["text", "json", "latex", "csv"])
    c.set_defaults(fn=_compute)

    v = sub.add_parser("verify", help="run the cross-method identity suite")
    v.add_argument("--n", default="4", help="sequence length, 2..5, or a range like 2-4")
    v.add_argument(
        "--max",
        type=int,
        default=int(os.environ.get("QTC_VERIFY_MAX", "3")),
        help="entry bound for the sweep (default 3, env QTC_VERIFY_MAX)",
    )
    v.add_argument(
        "--jobs", type=int, default=None, help="worker processes (default 1, env QTC_JOBS)"
    )
    v.set_defaults(fn=_verify)

    d = sub.add_parser("decompose", help="print the chain decomposition for (a, b, c)")
    d.add_argument("--abc", required=True)
    d.add_argument("--format", default="text", choices=["text", "csv"])
    d.set_defaults(fn=_decompose)

    s = sub.add_parser("scan", help="search vectors for negative coefficients")
    s.add_argument("--n", type=int, required=True, help="sequence length (2..5)")
    s.add_argument("--max", type=int, required=True, help="entry bound")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--monotone", action="store_true", help="weakly decreasing vectors only (default)")
    group.add_argument("--all", action="store_true", help="all vectors, including non-monotone")
    s.set_defaults(fn=_scan)

    r = sub.add_parser("rational", help="the slope-sequence specialization")
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--n", type=int, required=True)
    r.set_defaults(fn=_rational)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, NotPolynomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
