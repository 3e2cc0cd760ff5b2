"""Command-line front end: generate family tables, run verification suites,
compute moments and q-Catalan numbers, and emit JSON/CSV/text reports.

Exit codes: 0 = success / all identities pass, 1 = at least one identity
failure, 2 = usage or parameter error.  Rationals are always serialized as
lowest-terms "num/den" strings.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import families, moments
from .polyring import format_rational
from .qkernel import ParamPoint, PoleError, q_catalan
from .report import IdentityReport
from .suites import run_suite, summarize


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a valid rational: {text!r} ({exc})")
    return value


def _parse_family(name: str) -> families.FamilyId:
    try:
        return families.FamilyId(name)
    except ValueError:
        valid = ", ".join(f.value for f in families.FamilyId)
        raise UsageError(f"unknown family {name!r}; choose from {valid}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcheb",
        description="Exact q-polynomial family generation and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print family polynomials for n = 0 .. N")
    gen.add_argument("--family", required=True, help="family id, e.g. T, U, F_QB")
    gen.add_argument("--n", type=int, required=True, help="largest index to print")
    gen.add_argument("--q", default="2", help='rational q as "num/den"')
    gen.add_argument("--b", default="0", help='rational b as "num/den"')
    gen.add_argument("--format", choices=("json", "csv", "text"), default="text")

    verify = sub.add_parser("verify", help="run an identity verification suite")
    verify.add_argument("--suite", choices=("core", "extended", "all"), default="core")
    verify.add_argument("--q", default=None, help="restrict to one q sample")
    verify.add_argument("--b", default=None, help="restrict to one b sample")
    verify.add_argument("--max-n", type=int, default=None, help="override index bounds")
    verify.add_argument("--parallelism", type=int, default=1)
    verify.add_argument("--format", choices=("json", "csv", "text"), default="text")
    verify.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)

    mom = sub.add_parser("moments", help="print moment values for x^0 .. x^N")
    mom.add_argument(
        "--family", default="GEN_FIB", help="GEN_FIB, GEN_LUCAS, CARLITZ or CLASSICAL"
    )
    mom.add_argument("--n", type=int, required=True)
    mom.add_argument("--q", default="2", help='rational q as "num/den"')
    mom.add_argument("--s-implied", action="store_true", help=argparse.SUPPRESS)
    mom.add_argument("--format", choices=("json", "csv", "text"), default="text")

    cat = sub.add_parser("catalan", help="print q-Catalan numbers C_0 .. C_N")
    cat.add_argument("--n", type=int, required=True)
    cat.add_argument("--q", default="1", help='rational q as "num/den"')
    cat.add_argument("--format", choices=("json", "csv", "text"), default="text")

    return parser


# -- gen ----------------------------------------------------------------


def cmd_gen(args, out) -> int:
    family = _parse_family(args.family)
    q = _parse_rational(args.q)
    b = _parse_rational(args.b)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    point = ParamPoint(q, b, allow_classical=(q == 1))
    rows = [(n, families.family_poly(family, n, point)) for n in range(args.n + 1)]
    if args.format == "json":
        payload = {
            "family": family.value,
            "q": format_rational(q),
            "b": format_rational(b),
            "rows": [{"n": n, "poly": poly.to_json()} for n, poly in rows],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("n,poly\n")
        for n, poly in rows:
            out.write(f'{n},"{poly}"\n')
    else:
        for n, poly in rows:
            out.write(f"{family.value}_{n} = {poly}\n")
    return 0


# -- verify -------------------------------------------------------------


def _emit_reports(reports, fmt, out):
    counts = summarize(reports)
    if fmt == "json":
        payload = {"summary": counts, "reports": [r.to_json() for r in reports]}
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        out.write("identity_id,q,b,n_lo,n_hi,status\n")
        for r in reports:
            q = format_rational(r.point.q) if r.point else ""
            b = format_rational(r.point.b) if r.point else ""
            lo, hi = r.index_range
            out.write(f"{r.identity_id},{q},{b},{lo},{hi},{r.status}\n")
    else:
        for r in reports:
            where = ""
            if r.point is not None:
                where = f" @ q={format_rational(r.point.q)}, b={format_rational(r.point.b)}"
            out.write(f"{r.status:7s} {r.identity_id}{where}  n in {r.index_range}\n")
            if r.witness is not None:
                out.write(f"        witness n={r.witness['n']}:\n")
                out.write(f"          lhs = {r.witness['lhs']}\n")
                out.write(f"          rhs = {r.witness['rhs']}\n")
        out.write(
            f"summary: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['skipped']} skipped\n"
        )


def cmd_verify(args, out) -> int:
    qs = [_parse_rational(args.q)] if args.q is not None else None
    bs = [_parse_rational(args.b)] if args.b is not None else None
    if args.parallelism < 1:
        raise UsageError("--parallelism must be >= 1")
    bounds = None
    if args.max_n is not None:
        if args.max_n < 1:
            raise UsageError("--max-n must be >= 1")
        m = args.max_n
        bounds = {
            "dual": m,
            "third_route": min(m, 14),
            "negative": min(m, 10),
            "cassini": (-min(m, 6), m),
            "cassini_euler": (min(m, 12), 6),
            "matrix": min(m, 10),
            "trace": min(m, 10),
            "det": m,
            "det_sqrt": min(m, 12),
            "tridiag": min(m, 14),
            "moments": min(m, 12),
            "reconstruct": min(m, 14),
            "deriv": m,
            "qode": min(m, 16),
            "genfun": min(m, 16),
            "registry": m,
            "binet_sum": min(m, 14),
            "classical": min(m, 12),
            "schlosser": min(m, 10),
            "fib_words": min(m, 14),
            "rodrigues": min(m, 8),
        }
    if args.inject_fault is not None:
        families.set_fault(_parse_family(args.inject_fault))
    try:
        reports = run_suite(
            args.suite, qs=qs, bs=bs, parallelism=args.parallelism, bounds=bounds
        )
    finally:
        families.set_fault(None)
    _emit_reports(reports, args.format, out)
    return 0 if summarize(reports)["fail"] == 0 else 1


# -- moments ------------------------------------------------------------


def cmd_moments(args, out) -> int:
    q = _parse_rational(args.q)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    name = args.family.upper()
    if name == "CLASSICAL" or (name == "CARLITZ" and q == 1):
        spec = moments.classical_spec()
    elif name == "GEN_FIB":
        spec = moments.gen_fib_spec(q)
    elif name == "GEN_LUCAS":
        spec = moments.gen_lucas_spec(q)
    elif name == "CARLITZ":
        spec = moments.carlitz_spec(q)
    else:
        raise UsageError(
            f"unknown moment family {args.family!r}; "
            "choose GEN_FIB, GEN_LUCAS, CARLITZ or CLASSICAL"
        )
    values = moments.moments_from_recurrence(spec, args.n + 1)
    if args.format == "json":
        payload = {
            "family": name,
            "q": format_rational(q),
            "rows": [{"m": m, "moment": v.to_json()} for m, v in enumerate(values)],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("m,moment\n")
        for m, v in enumerate(values):
            out.write(f'{m},"{v}"\n')
    else:
        for m, v in enumerate(values):
            out.write(f"moment(x^{m}) = {v}\n")
    return 0


# -- catalan ------------------------------------------------------------


def cmd_catalan(args, out) -> int:
    q = _parse_rational(args.q)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if q == 0:
        raise UsageError("q must be nonzero")
    values = [q_catalan(n, q) for n in range(args.n + 1)]
    if args.format == "json":
        payload = {
            "q": format_rational(q),
            "values": [format_rational(v) for v in values],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("n,catalan\n")
        for n, v in enumerate(values):
            out.write(f"{n},{format_rational(v)}\n")
    else:
        out.write(", ".join(format_rational(v) for v in values) + "\n")
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "gen": cmd_gen,
        "verify": cmd_verify,
        "moments": cmd_moments,
        "catalan": cmd_catalan,
    }
    try:
        return handlers[args.command](args, out)
    except (UsageError, PoleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
