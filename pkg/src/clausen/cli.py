"""Command-line front end.

Exit status: 0 on success or ``Verified``, 1 on ``Deviation``, 2 on usage
errors, degenerate parameters or refused checks.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from typing import Sequence, TextIO

from clausen.charpoly import (
    ClausenParams,
    char_poly,
    char_poly_via_interpolation,
    hat_poly_direct,
    hat_poly_interp,
    identity_valid,
    perturbation_poly,
)
from clausen.exact import format_rational, parse_rational
from clausen.poly import RatPoly
from clausen.series import DegenerateParameter, NonTerminating, SeriesSpec, series_coeffs
from clausen.suite import random_rational, run_suite
from clausen.verify import (
    Status,
    VerifyReport,
    verify_karlsson,
    verify_operator_lemma,
    verify_product,
    verify_recurrence,
    verify_square,
    verify_summations,
    verify_whipple,
)

EXIT_OK, EXIT_DEVIATION, EXIT_USAGE = 0, 1, 2
DEFAULT_TERMS = 40

_EXIT_FOR_STATUS = {
    Status.VERIFIED: EXIT_OK,
    Status.DEVIATION: EXIT_DEVIATION,
    Status.DEGENERATE: EXIT_USAGE,
    Status.REFUSED: EXIT_USAGE,
}


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str):
    try:
        return [parse_rational(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _natural_list(text: str) -> list[int]:
    return [_natural(part) for part in text.split(",")]


def _optional_list(text: str):
    """Comma-separated rationals; an empty string means an empty list."""
    return _rational_list(text) if text.strip() else []


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")

    clausen = argparse.ArgumentParser(add_help=False)
    clausen.add_argument("--a", type=_rational, required=True)
    clausen.add_argument("--b", type=_rational, required=True)
    clausen.add_argument("--m", type=_natural, required=True)

    terms = argparse.ArgumentParser(add_help=False)
    terms.add_argument("--terms", type=_natural, default=DEFAULT_TERMS, help="truncation order N")

    parser = argparse.ArgumentParser(prog="clausen", description="Exact checks of extended Clausen product formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common, clausen], help="characteristic polynomial P_{2m}^{a,b}")
    p.add_argument("--method", choices=("closed", "interp"), default="closed")

    p = sub.add_parser("hatpoly", parents=[common, clausen], help="perturbed characteristic polynomial")
    p.add_argument("--sigma", type=_rational_list, required=True, help="F_s coefficients, lowest degree first")
    p.add_argument("--method", choices=("direct", "interp"), default="direct")

    p = sub.add_parser("series", parents=[common, terms], help="coefficients of a perturbed hypergeometric series")
    p.add_argument("--top", type=_optional_list, required=True)
    p.add_argument("--bottom", type=_optional_list, default=[])
    p.add_argument("--perturb", type=_rational_list, default=None, help="perturbing polynomial, lowest degree first")

    verify = sub.add_parser("verify", help="verify one identity")
    vsub = verify.add_subparsers(dest="identity", required=True)
    vsub.add_parser("square", parents=[common, clausen, terms])
    p = vsub.add_parser("product", parents=[common, clausen, terms])
    p.add_argument("--sigma", type=_rational_list, required=True)
    p = vsub.add_parser("summations", parents=[common, clausen])
    p.add_argument("--sigma", type=_rational_list, default=[1])
    p.add_argument("--k-max", type=_natural, default=12)
    p = vsub.add_parser("recurrence", parents=[common, clausen])
    p.add_argument("--k-max", type=_natural, default=30, help="largest n in the recurrence")
    p = vsub.add_parser("whipple", parents=[common])
    for name in ("a", "b", "c", "d", "e"):
        p.add_argument(f"--{name}", type=_rational, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p = vsub.add_parser("karlsson", parents=[common, terms])
    p.add_argument("--top", type=_optional_list, required=True)
    p.add_argument("--bottom", type=_optional_list, default=[])
    p.add_argument("--f", type=_rational_list, required=True)
    p.add_argument("--mvec", type=_natural_list, required=True)
    p = vsub.add_parser("operator", parents=[common, terms])
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--coeffs", type=_rational_list, default=None, help="series coefficients; random if omitted")
    p.add_argument("--seed", type=_natural, default=0)

    p = sub.add_parser("suite", parents=[common], help="run the full acceptance grid")
    p.add_argument("--seed", type=_natural, default=0)
    return parser


def _emit_report(report: VerifyReport, fmt: str, out: TextIO) -> int:
    if fmt == "json":
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "lhs", "rhs", "equal"])
        for index, lhs, rhs in report.rows:
            writer.writerow([index, format_rational(lhs), format_rational(rhs), lhs == rhs])
    else:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        out.write(f"{report.identity} [{params}]: {report.status.value} ({report.terms_checked} terms)\n")
        if report.first_deviation is not None:
            d = report.first_deviation
            out.write(f"  first deviation at k={d.index}: lhs={format_rational(d.lhs)} rhs={format_rational(d.rhs)}\n")
        if report.polynomial is not None:
            out.write(f"  polynomial: {report.polynomial}\n")
        if report.note:
            out.write(f"  note: {report.note}\n")
    return _EXIT_FOR_STATUS[report.status]


def _emit_construction(identity: str, params: dict, poly: RatPoly, fmt: str, out: TextIO, **extra) -> int:
    if fmt == "json":
        payload = {"identity": identity, "params": params, "terms_checked": 0, "status": "Constructed",
                   "polynomial": poly.to_strings(), **extra}
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["i", "coefficient"])
        for i, c in enumerate(poly.to_strings()):
            writer.writerow([i, c])
    else:
        out.write(f"{poly}\n")
        for key, value in extra.items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def _degenerate(identity: str, params: dict, exc: Exception, fmt: str, out: TextIO) -> int:
    report = VerifyReport(identity, params, status=Status.DEGENERATE, note=str(exc))
    return _emit_report(report, fmt, out)


def _cmd_charpoly(args, out):
    params = ClausenParams(args.a, args.b, args.m)
    build = char_poly if args.method == "closed" else char_poly_via_interpolation
    try:
        poly = build(params)
    except DegenerateParameter as exc:
        return _degenerate("charpoly", params.as_dict(), exc, args.format, out)
    return _emit_construction("charpoly", params.as_dict(), poly, args.format, out)


def _cmd_hatpoly(args, out):
    params = ClausenParams(args.a, args.b, args.m)
    fs = perturbation_poly(args.sigma)
    info = {**params.as_dict(), "sigma": ",".join(map(format_rational, args.sigma))}
    valid = identity_valid(params, fs)
    if args.method == "direct" and not valid:
        report = VerifyReport("hatpoly", info, status=Status.REFUSED,
                              note="closed form needs s <= 2m+1; use --method interp")
        return _emit_report(report, args.format, out)
    build = hat_poly_direct if args.method == "direct" else hat_poly_interp
    try:
        poly = build(params, fs)
    except DegenerateParameter as exc:
        return _degenerate("hatpoly", info, exc, args.format, out)
    return _emit_construction("hatpoly", info, poly, args.format, out, identity_valid=valid)


def _cmd_series(args, out):
    spec = SeriesSpec(args.top, args.bottom)
    poly = RatPoly(args.perturb) if args.perturb is not None else RatPoly.constant(1)
    info = {"top": ",".join(map(format_rational, spec.top)), "bottom": ",".join(map(format_rational, spec.bottom)),
            "perturb": ",".join(poly.to_strings()), "N": str(args.terms)}
    try:
        coeffs = series_coeffs(spec.perturbed(poly), args.terms)
    except DegenerateParameter as exc:
        return _degenerate("series", info, exc, args.format, out)
    values = [format_rational(c) for c in coeffs]
    if args.format == "json":
        json.dump({"identity": "series", "params": info, "terms_checked": len(values), "status": "Constructed",
                   "coefficients": values}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "coefficient"])
        writer.writerows(enumerate(values))
    else:
        out.write(" ".join(values) + "\n")
    return EXIT_OK


def _cmd_verify(args, out):
    kind = args.identity
    if kind in ("square", "product", "summations", "recurrence"):
        params = ClausenParams(args.a, args.b, args.m)
        if kind == "square":
            report = verify_square(params, args.terms)
        elif kind == "product":
            report = verify_product(params, args.sigma, args.terms)
        elif kind == "summations":
            report = verify_summations(params, args.sigma, args.k_max)
        else:
            report = verify_recurrence(params, args.k_max)
    elif kind == "whipple":
        report = verify_whipple(args.a, args.b, args.c, args.d, args.e, args.n)
    elif kind == "karlsson":
        report = verify_karlsson(args.top, args.bottom, args.f, args.mvec, args.terms)
    else:
        coeffs = args.coeffs
        if coeffs is None:
            rng = random.Random(args.seed)
            coeffs = [random_rational(rng) for _ in range(args.terms + 1)]
        report = verify_operator_lemma(coeffs, args.n)
    return _emit_report(report, args.format, out)


def _cmd_suite(args, out):
    result = run_suite(args.seed)
    if args.format == "json":
        json.dump(result, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["criterion", "identity", "status", "expected", "terms_checked"])
        for crit in result["criteria"]:
            for rep in crit["reports"]:
                writer.writerow([crit["criterion"], rep["identity"], rep["status"], rep["expected"], rep["terms_checked"]])
    else:
        for crit in result["criteria"]:
            verdict = "PASS" if crit["passed"] else "FAIL"
            out.write(f"criterion {crit['criterion']:2d} {verdict}: {crit['title']} ({len(crit['reports'])} checks)\n")
        out.write(f"overall: {result['status']} (seed {result['seed']})\n")
    return EXIT_OK if result["status"] == "Verified" else EXIT_DEVIATION


_COMMANDS = {
    "charpoly": _cmd_charpoly,
    "hatpoly": _cmd_hatpoly,
    "series": _cmd_series,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, NonTerminating) as exc:
        # bad combinations argparse cannot see, e.g. sigma with a zero leading coefficient
        sys.stderr.write(f"clausen: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
