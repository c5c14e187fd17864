"""Command line front end.

Every command prints one JSON document.  Exit codes: 0 nonnegative (or a
plain success), 1 negative / false, 2 inconclusive, 64 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from .bounds import branch_and_bound_nn
from .certify import certify_cosine, certify_sine
from .criteria import CriteriaReport, EndpointCheck, criteria_report
from .families import FamilyId
from .oracle import random_sine_poly
from .polys import CosinePoly, SinePoly, format_rational, parse_coefficients, parse_rational
from .region import (
    boundary_csv,
    boundary_svg,
    boundary_sweep,
    cosine2_case,
    cosine2_reduction,
    degree3_case,
    kappa0,
)
from .sturm import INCONCLUSIVE, NEGATIVE, NONNEGATIVE, Verdict

EXIT_NONNEGATIVE = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

_EXIT_FOR_STATUS = {NONNEGATIVE: EXIT_NONNEGATIVE, NEGATIVE: EXIT_NEGATIVE, INCONCLUSIVE: EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


def _r(q: Optional[Fraction]) -> Optional[str]:
    return None if q is None else format_rational(q)


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def verdict_fields(v: Verdict) -> dict:
    out: dict[str, Any] = {"status": v.status, "method": v.method}
    if v.witness_X is not None:
        out["witness_X"] = _r(v.witness_X)
    if v.witness_x is not None:
        out["witness_x"] = _r(v.witness_x) if isinstance(v.witness_x, Fraction) else v.witness_x
    if v.witness_value is not None:
        out["witness_value"] = _r(v.witness_value)
    if v.certificate is not None:
        out["certificate"] = {
            "roots": [[_r(a), _r(b)] for a, b in v.certificate.roots],
            "samples": [[_r(x), _r(y)] for x, y in v.certificate.samples],
        }
    if v.method == "interval":
        out["nodes"] = v.nodes
    return out


def _endpoint_json(e: EndpointCheck) -> dict:
    out = {"first_sum": _r(e.first_sum), "pass": e.pass_}
    if e.third_sum is not None:
        out["third_sum"] = _r(e.third_sum)
        out["third_pass"] = e.third_pass
        out["third_condition"] = "third_sum " + e.third_direction
        out["printed_third_condition"] = "third_sum " + e.printed_third_direction
    return out


def report_fields(r: CriteriaReport) -> dict:
    return {
        "belov_ok": r.belov_ok,
        "belov_partial_sums": [_r(s) for s in r.belov_partial_sums],
        "fejer_ok": r.fejer_ok,
        "nec_at_0": _endpoint_json(r.nec_at_0),
        "nec_at_pi": _endpoint_json(r.nec_at_pi),
        "necessary_ok": r.necessary_ok,
        "notes": r.notes,
    }


def _rational(text: str, what: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise UsageError(f"{what}: {e}") from None


def _coeffs(text: str, what: str = "coefficients") -> list[Fraction]:
    try:
        return parse_coefficients(text)
    except ValueError as e:
        raise UsageError(f"{what}: {e}") from None


def _positive_tol(args) -> Fraction:
    tol = _rational(args.tol, "--tol")
    if tol <= 0:
        raise UsageError("--tol must be positive")
    return tol


# ---------------------------------------------------------------------------
# commands; each returns (document, exit code)


def cmd_certify(args) -> tuple[dict, int]:
    if args.coeffs.startswith("random:"):
        try:
            degree = int(args.coeffs.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"expected random:<degree>, got {args.coeffs!r}") from None
        if degree < 1:
            raise UsageError("random degree must be >= 1")
        coeffs = list(random_sine_poly(degree, 9, args.seed).coeffs)
    else:
        coeffs = _coeffs(args.coeffs)
    doc: dict[str, Any] = {"input": {"kind": args.kind, "coeffs": [_r(c) for c in coeffs], "method": args.method}}
    if args.kind == "sine":
        p = SinePoly(coeffs)
        v = certify_sine(p) if args.method == "sturm" else branch_and_bound_nn(p, 0, None, args.max_depth)
    else:
        if args.method != "sturm":
            raise UsageError("the interval method handles sine polynomials only")
        v = certify_cosine(CosinePoly(coeffs))
    doc.update(verdict_fields(v))
    return doc, _EXIT_FOR_STATUS[v.status]


def cmd_criteria(args) -> tuple[dict, int]:
    p = SinePoly(_coeffs(args.coeffs))
    doc = {"input": {"coeffs": [_r(c) for c in p.coeffs]}, "status": "ok"}
    doc["sums"] = report_fields(criteria_report(p))
    return doc, 0


def _boundary_json(b) -> dict:
    return {"lambda": _r(b.lam), "kappa0_lo": _r(b.kappa0_lo), "kappa0_hi": _r(b.kappa0_hi), "method": b.method}


def cmd_kappa0(args) -> tuple[dict, int]:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    lam = _rational(args.lam, "lambda")
    tol = _positive_tol(args)
    b = kappa0(args.n, lam, tol, force_bisection=args.force_bisection)
    doc = {"input": {"n": args.n, "lambda": _r(lam), "tol": _r(tol)}, "status": "ok"}
    doc.update({k: v for k, v in _boundary_json(b).items() if k != "lambda"})
    return doc, 0


def cmd_boundary(args) -> tuple[dict, int]:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    if args.steps < 2:
        raise UsageError("steps must be >= 2")
    lo, hi = _rational(args.lam_lo, "lambda_lo"), _rational(args.lam_hi, "lambda_hi")
    if hi <= lo:
        raise UsageError("need lambda_lo < lambda_hi")
    tol = _positive_tol(args)
    pts = boundary_sweep(args.n, lo, hi, args.steps, tol)
    text = boundary_csv(pts, tol) if args.format == "csv" else boundary_svg(pts)
    try:
        Path(args.out).write_text(text)
    except OSError as e:
        raise UsageError(f"cannot write {args.out}: {e}") from None
    low = min(pts, key=lambda p: p.kappa0_hi)
    doc = {
        "input": {"n": args.n, "lambda_lo": _r(lo), "lambda_hi": _r(hi), "steps": args.steps, "tol": _r(tol), "format": args.format},
        "status": "ok",
        "out": str(args.out),
        "rows": len(pts),
        "min_point": _boundary_json(low),
        "methods": sorted({p.method for p in pts}),
    }
    return doc, 0


def cmd_characterize(args) -> tuple[dict, int]:
    a, b, c = (_rational(x, name) for x, name in ((args.a, "a"), (args.b, "b"), (args.c, "c")))
    if args.kind == "sine3":
        ok, case, values = degree3_case(a, b, c)
        extra = {}
    else:
        ok, case, values = cosine2_case(a, b, c)
        extra = {"reduced_sine": [_r(x) for x in cosine2_reduction(a, b, c).coeffs]}
    doc = {
        "input": {"kind": args.kind, "a": _r(a), "b": _r(b), "c": _r(c)},
        "status": NONNEGATIVE if ok else NEGATIVE,
        "verdict": ok,
        "case": case,
        "values": _jsonable(values),
        **extra,
    }
    return doc, EXIT_NONNEGATIVE if ok else EXIT_NEGATIVE


def cmd_family(args) -> tuple[dict, int]:
    try:
        fid = FamilyId.parse(args.id)
        p = fid.build()
    except ValueError as e:
        raise UsageError(str(e)) from None
    v = certify_sine(p)
    doc = {"input": {"id": str(fid)}, "coeffs": [_r(c) for c in p.coeffs]}
    doc.update(verdict_fields(v))
    doc["sums"] = report_fields(criteria_report(p))
    return doc, _EXIT_FOR_STATUS[v.status]


# ---------------------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action=argparse.BooleanOptionalAction, default=d(True), help="emit JSON (default)")
    p.add_argument("--tol", default=d("1/1000000"), help="exact rational tolerance, e.g. 1/1000000")
    p.add_argument("--max-depth", type=int, default=d(12), help="bisection depth of the interval method")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random:<degree> coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigcert", description="Exact nonnegativity of sine/cosine polynomials on [0, pi].")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", parents=[common], help="decide nonnegativity on [0, pi]")
    p.add_argument("kind", choices=["sine", "cosine"])
    p.add_argument("coeffs", help='comma separated rationals, e.g. "5/4,1,1/4"')
    p.add_argument("--method", choices=["sturm", "interval"], default="sturm")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("criteria", parents=[common], help="Belov, Fejer and endpoint conditions")
    p.add_argument("coeffs")
    p.set_defaults(func=cmd_criteria)

    p = sub.add_parser("kappa0", parents=[common], help="boundary of P_n at one lambda")
    p.add_argument("n", type=int)
    p.add_argument("lam", metavar="lambda")
    p.add_argument("--force-bisection", action="store_true")
    p.set_defaults(func=cmd_kappa0)

    p = sub.add_parser("boundary", parents=[common], help="sweep kappa0 over a lambda range")
    p.add_argument("n", type=int)
    p.add_argument("lam_lo", metavar="lambda_lo")
    p.add_argument("lam_hi", metavar="lambda_hi")
    p.add_argument("steps", type=int)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("characterize", parents=[common], help="degree-3 sine / degree-2 cosine criteria")
    p.add_argument("kind", choices=["sine3", "cosine2"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("family", parents=[common], help="named family member, e.g. phi:9")
    p.add_argument("id")
    p.set_defaults(func=cmd_family)
    return parser


def _human(doc: dict) -> str:
    lines = []
    for k, v in doc.items():
        lines.append(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage, which would collide with "inconclusive"
        return 0 if e.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        doc, code = args.func(args)
    except UsageError as e:
        doc, code = {"status": "error", "error": str(e)}, EXIT_USAGE
        print(f"trigcert: {e}", file=sys.stderr)
    doc = {"command": args.command, **doc, "timings_ms": {"total": round((time.perf_counter() - start) * 1000, 3)}}
    print(json.dumps(doc, indent=2) if args.json else _human(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
