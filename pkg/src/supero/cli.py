"""Command-line front end: build algebras, run cohomology, verify suites.

Exit codes: 0 success (or all rows pass), 1 internal failure, 2 usage
error, 3 mathematical-consistency failure.  JSON output is byte-identical
across runs for the same job; rationals are emitted as (numerator,
denominator) pairs, never floats (the one exception is the heuristic
growth-rate estimate).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebras import (
    LieSuperalgebra,
    SubalgebraSpan,
    build_gl,
    build_osp,
    build_p_tilde,
    build_q,
    special_linear_span,
)
from .cohomology import CohomologyReport, cohomology
from .errors import (
    ConventionError,
    DimensionMismatch,
    EmptyAlgebra,
    FormError,
    SuperoError,
    UnsupportedModule,
    UnsupportedRank,
    UnsupportedSubalgebra,
)
from .reps import Representation, adjoint, dual, natural, tensor, trivial
from .roots import named_subalgebra
from .suites import SUITES, run_suite

USAGE_ERRORS = (
    EmptyAlgebra,
    UnsupportedRank,
    FormError,
    UnsupportedSubalgebra,
    UnsupportedModule,
    DimensionMismatch,
)


def build_family(family: str, params: list[int]) -> LieSuperalgebra:
    if family == "gl":
        if len(params) != 2:
            raise UnsupportedRank("gl needs two parameters: m n")
        return build_gl(*params)
    if family == "sl":
        if len(params) != 2:
            raise UnsupportedRank("sl needs two parameters: m n")
        m, n = params
        return special_linear_span(build_gl(m, n), m, n).to_algebra(f"sl({m}|{n})")
    if family == "q":
        if len(params) != 1:
            raise UnsupportedRank("q needs one parameter: n")
        return build_q(params[0])
    if family in ("p", "p_tilde"):
        if len(params) != 1:
            raise UnsupportedRank("p_tilde needs one parameter: n")
        return build_p_tilde(params[0])
    if family == "osp":
        if len(params) != 2:
            raise UnsupportedRank("osp needs two parameters: m two_n")
        return build_osp(*params)
    raise UnsupportedRank(f"unknown family {family!r} (choose gl, sl, q, p_tilde, osp)")


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        out.append(Fraction(piece))
    return tuple(out)


def parse_module(g: LieSuperalgebra, spec: str) -> Representation:
    """Module expressions: trivial | natural | adjoint | dual(E) | E*E."""
    spec = spec.strip()
    depth = 0
    for i, ch in enumerate(spec):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            return tensor(parse_module(g, spec[:i]), parse_module(g, spec[i + 1 :]))
    if spec.startswith("dual(") and spec.endswith(")"):
        return dual(parse_module(g, spec[5:-1]))
    if spec == "trivial":
        return trivial(g)
    if spec == "natural":
        return natural(g)
    if spec == "adjoint":
        return adjoint(g)
    raise UnsupportedModule(f"cannot parse module spec {spec!r}")


def parse_subalgebra(g: LieSuperalgebra, spec: str, H: tuple[Fraction, ...] | None) -> SubalgebraSpan:
    if spec.startswith("span:"):
        path = spec[5:]
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        vectors = [
            tuple(Fraction(num, den) for num, den in vec) for vec in data["vectors"]
        ]
        return SubalgebraSpan(g, vectors, data.get("label", "span"))
    return named_subalgebra(g, spec, H=H)


def emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def report_table(report: CohomologyReport) -> str:
    head = f"{'p':>3} {'dimC_even':>10} {'dimC_odd':>9} {'rank_d':>7} {'dimH_even':>10} {'dimH_odd':>9}"
    lines = [
        f"# {report.algebra}  h={report.subalgebra}  M={report.module}  N={report.max_degree}",
        head,
    ]
    for r in report.rows:
        lines.append(
            f"{r.degree:>3} {r.dim_cochains_even:>10} {r.dim_cochains_odd:>9} "
            f"{r.rank_differential:>7} {r.dim_cohomology_even:>10} {r.dim_cohomology_odd:>9}"
        )
    lines.append(f"# all differentials zero: {report.all_differentials_zero}")
    lines.append("# H dims: " + ",".join(str(r.dim_cohomology) for r in report.rows))
    return "\n".join(lines) + "\n"


def verify_table(report: dict) -> str:
    width = max((len(r["check"]) for r in report["rows"]), default=5)
    fam_w = max((len(r["family"]) for r in report["rows"]), default=6)
    lines = [f"# suite: {report['suite']}"]
    for r in report["rows"]:
        extra = f"  {r['witness']}" if "witness" in r else ""
        lines.append(
            f"{r['status'].upper():<4} {r['check']:<{width}} {r['family']:<{fam_w}} "
            f"{json.dumps(r['params'], sort_keys=True)}{extra}"
        )
    lines.append(f"# all_pass: {report['all_pass']}")
    return "\n".join(lines) + "\n"


def thread_workers() -> int:
    raw = os.environ.get("SUPERO_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise DimensionMismatch(f"SUPERO_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise DimensionMismatch("SUPERO_THREADS must be >= 0")
    if n == 0:
        return os.cpu_count() or 1
    return n


def cmd_build(args) -> int:
    g = build_family(args.family, args.params)
    emit(dumps(g.to_json_dict()), args.out)
    return 0


def cmd_coh(args) -> int:
    g = build_family(args.family, args.params)
    H = parse_rationals(args.H) if args.H else None
    h = parse_subalgebra(g, args.sub, H)
    mod = parse_module(g, args.mod)
    if args.N is not None:
        max_degree = args.N
    else:
        # largest degree where mixed even/odd quotient directions still
        # contribute new monomials once
        even_quot = sum(
            1
            for i in g.even_indices
            if i not in set(h.solver.pivot_cols)
        )
        max_degree = len(g.odd_indices) + even_quot
    if max_degree < 0:
        raise DimensionMismatch("N must be nonnegative")
    report = cohomology(g, h, mod, max_degree)
    if args.format == "json":
        emit(dumps(report.to_json_dict()), args.out)
    else:
        emit(report_table(report), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        sys.stderr.write(
            f"unknown suite {args.suite!r}; available: {', '.join(sorted(SUITES))}\n"
        )
        return 2
    workers = thread_workers()
    report = run_suite(args.suite, workers=workers)
    if args.format == "json":
        emit(dumps(report), args.out)
    else:
        emit(verify_table(report), args.out)
    return 0 if report["all_pass"] else 3


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supero",
        description="Exact Lie-superalgebra toolkit: construction, relative "
        "cochain cohomology, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct an algebra and emit its JSON")
    p_build.add_argument("family", help="gl | sl | q | p_tilde | osp")
    p_build.add_argument("params", nargs="*", type=int)
    p_build.add_argument("--out", default=None)
    p_build.set_defaults(func=cmd_build)

    p_coh = sub.add_parser("coh", help="relative cohomology report")
    p_coh.add_argument("family")
    p_coh.add_argument("params", nargs="*", type=int)
    p_coh.add_argument("--sub", default="g0", help="g0 | torus | full | borel | levi | span:FILE")
    p_coh.add_argument("--mod", default="trivial", help="trivial | natural | adjoint | dual(E) | E*E")
    p_coh.add_argument("-N", type=int, default=None, help="maximum degree (default: odd dim + even quotient dim)")
    p_coh.add_argument("--H", default=None, help="comma-separated rationals for levi/borel")
    p_coh.add_argument("--format", choices=("table", "json"), default="table")
    p_coh.add_argument("--out", default=None)
    p_coh.set_defaults(func=cmd_coh)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help=" | ".join(sorted(SUITES)))
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ConventionError as exc:
        sys.stderr.write(f"consistency error: {exc}\n")
        return 3
    except SuperoError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
