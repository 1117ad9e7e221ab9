"""Command-line front end.

Every subcommand prints deterministic text, or with ``--json`` a single
object ``{"ok": ..., "data": ..., "witness": ...}``.  Exit status is 0 on
success, 1 when a mathematical check fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable

from .bundles import find_cocycle_violation
from .euler import euler_sequence_fiber, hyperplane_sequence_fiber, taut_sequence_fiber
from .field import Field, FieldError, QQ
from .poly import PolySyntaxError, UnknownVariable, parse_poly
from .projmaps import segre, veronese
from .projspace import OutsideOverlap, ProjPoint, TooLarge, chart_coords, enumerate_proj, overlap, parse_point
from .sections import (
    DenominatorVanishes,
    NonvanishingCertificate,
    UndecidedDenominator,
    Undecided,
    VanishesAt,
    certify_nonvanishing,
    coefficient_rank,
    local_rep,
    parse_section,
    random_points,
    section_basis,
)


class UsageError(Exception):
    pass


@dataclass
class Report:
    ok: bool
    data: Any
    text: str
    witness: Any = None


def _vec(v) -> list[str]:
    return [str(c) for c in v]


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def _point(text: str, fld: Field, n: int | None = None) -> ProjPoint:
    try:
        P = parse_point(text, fld)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from exc
    if n is not None and P.n != n:
        raise UsageError(f"point {text} has {len(P)} coordinates, expected {n + 1}")
    return P


def _sample_points(args, fld: Field, n: int) -> tuple[list[ProjPoint], dict]:
    if args.exhaustive:
        if not fld.is_finite:
            raise UsageError("--exhaustive needs a finite field")
        try:
            return list(enumerate_proj(fld, n)), {"mode": "exhaustive"}
        except TooLarge as exc:
            raise UsageError(str(exc)) from exc
    return random_points(fld, n, args.samples, args.seed), {"mode": "samples", "samples": args.samples, "seed": args.seed}


# subcommands


def cmd_sections_dim(args) -> Report:
    basis = section_basis(args.n, args.d)
    r = coefficient_rank(basis)
    ok = r == len(basis)
    data = {"n": args.n, "d": args.d, "dimension": len(basis), "rank": r}
    return Report(ok, data, str(len(basis)) if ok else f"rank {r} < {len(basis)}")


def cmd_cocycle_check(args) -> Report:
    points, mode = _sample_points(args, args.field, args.n)
    violation, checks = find_cocycle_violation(args.e, points)
    data = {"n": args.n, "e": args.e, "field": str(args.field), "points": len(points), "checks": checks, **mode}
    if violation is None:
        return Report(True, data, "ok")
    witness = {"charts": list(violation.charts), "point": str(violation.point), "product": str(violation.product)}
    text = f"violation: charts {violation.charts} at {violation.point}, product {violation.product}"
    return Report(False, data, text, witness)


def cmd_enumerate(args) -> Report:
    if not args.field.is_finite:
        raise UsageError("enumerate needs a finite field")
    try:
        pts = [str(P) for P in enumerate_proj(args.field, args.n)]
    except TooLarge as exc:
        raise UsageError(str(exc)) from exc
    return Report(True, {"count": len(pts), "points": pts}, "\n".join(pts))


def cmd_overlap(args) -> Report:
    P = _point(args.point, args.field, args.n)
    try:
        u = chart_coords(P, args.k)
        w = overlap(args.j, args.k, u, args.field)
    except OutsideOverlap as exc:
        return Report(False, {"point": str(P)}, str(exc), {"point": str(P)})
    data = {"point": str(P), "j": args.j, "k": args.k, "source": _vec(u), "target": _vec(w)}
    return Report(True, data, _fmt_vec(w))


def cmd_veronese(args) -> Report:
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    P = _point(args.point, args.field, args.n)
    image = veronese(P, args.d)
    return Report(True, {"point": str(P), "image": str(image)}, str(image))


def cmd_segre(args) -> Report:
    P = _point(args.pointA, args.field, args.m)
    Q = _point(args.pointB, args.field, args.n)
    image = segre(P, Q)
    return Report(True, {"pointA": str(P), "pointB": str(Q), "image": str(image)}, str(image))


def cmd_euler_check(args) -> Report:
    points, mode = _sample_points(args, args.field, args.n)
    builders = {
        "tautological": taut_sequence_fiber,
        "hyperplane": hyperplane_sequence_fiber,
        "euler": euler_sequence_fiber,
    }
    data = {"n": args.n, "field": str(args.field), "points": len(points), **mode}
    for P in points:
        for name, build in builders.items():
            seq = build(P)
            if not (seq.is_exact() and seq.kernel_is_image()):
                witness = {"sequence": name, "point": str(P)}
                return Report(False, data, f"{name} sequence not exact at {P}", witness)
    data["dims"] = {name: list(build(points[0]).dims) for name, build in builders.items()} if points else {}
    return Report(True, data, "ok")


def cmd_section_eval(args) -> Report:
    P = _point(args.point, args.field)
    try:
        s = parse_section(args.section, args.field, len(P), assume=args.assume)
    except DenominatorVanishes as exc:
        w = ProjPoint(args.field, exc.witness)
        return Report(False, {"section": args.section}, f"denominator vanishes at {w}", {"point": str(w)})
    except UndecidedDenominator as exc:
        return Report(False, {"section": args.section}, f"{exc} (pass --assume to proceed)")
    try:
        value = local_rep(s, args.chart, P)
    except OutsideOverlap as exc:
        return Report(False, {"point": str(P)}, str(exc), {"point": str(P)})
    data = {"section": str(s), "chart": args.chart, "point": str(P), "value": str(value), "certificate": str(s.cert)}
    return Report(True, data, str(value))


def cmd_certify_denominator(args) -> Report:
    ps = parse_poly(args.poly, args.field, None if args.n is None else args.n + 1)
    if ps.is_zero():
        raise UsageError("the zero polynomial vanishes identically")
    if not ps.is_homogeneous():
        raise UsageError("denominator must be homogeneous")
    D = ps.as_homogeneous()
    verdict = certify_nonvanishing(D)
    data = {"poly": str(D), "field": str(args.field)}
    if isinstance(verdict, NonvanishingCertificate):
        data["certificate"] = verdict.kind.value
        return Report(True, data, verdict.kind.value)
    if isinstance(verdict, VanishesAt):
        data["result"] = "VanishesAt"
        return Report(False, data, f"VanishesAt {verdict.witness}", {"point": str(verdict.witness)})
    assert isinstance(verdict, Undecided)
    data["result"] = "Undecided"
    data["reason"] = verdict.reason
    return Report(False, data, f"Undecided: {verdict.reason}")


# argument parsing


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a single JSON object")

    parser = _Parser(prog="projbundles", description="Exact computations with projective space and line bundles O(e).")
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help_text: str, with_field: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_field:
            p.add_argument("--field", type=_field_arg, default=QQ, help="Q or Fp:<p> (default Q)")
        p.set_defaults(func=func)
        return p

    def sampling(p: argparse.ArgumentParser) -> None:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--exhaustive", action="store_true", help="check every point (finite fields only)")
        g.add_argument("--samples", type=_nonneg, default=100, help="number of random points (default 100)")
        p.add_argument("--seed", type=int, default=0, help="seed for random points (default 0)")

    p = add("sections-dim", cmd_sections_dim, "dimension of the monomial section space of O(d) on P^n", with_field=False)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)

    p = add("cocycle-check", cmd_cocycle_check, "verify the transition cocycle of O(e)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--e", type=int, required=True)
    sampling(p)

    p = add("enumerate", cmd_enumerate, "list the points of P^n over a prime field")
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("overlap", cmd_overlap, "chart-j coordinates of a point given through chart k")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--j", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--point", required=True)

    p = add("veronese", cmd_veronese, "image of a point under the degree-d Veronese embedding")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--point", required=True)

    p = add("segre", cmd_segre, "image of a pair of points under the Segre embedding")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--pointA", required=True)
    p.add_argument("--pointB", required=True)

    p = add("euler-check", cmd_euler_check, "exactness of the tautological, hyperplane and Euler fibre sequences")
    p.add_argument("--n", type=_nonneg, required=True)
    sampling(p)

    p = add("section-eval", cmd_section_eval, "chart value of a section 'degree=<e>; N=<poly>; D=<poly>'")
    p.add_argument("--section", required=True)
    p.add_argument("--chart", type=_nonneg, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--assume", action="store_true", help="accept an uncertified denominator over Q")

    p = add("certify-denominator", cmd_certify_denominator, "certify that a form has no nonzero root")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_nonneg, default=None, help="projective dimension (default: inferred)")

    return parser


def _check_indices(args) -> None:
    n = getattr(args, "n", None)
    for name in ("j", "k"):
        idx = getattr(args, name, None)
        if idx is not None and n is not None and idx > n:
            raise UsageError(f"--{name} {idx} is not a chart of P^{n}")


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        obj = {"ok": report.ok, "data": report.data}
        if report.witness is not None:
            obj["witness"] = report.witness
        print(json.dumps(obj, sort_keys=True))
    else:
        print(report.text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_indices(args)
        report = args.func(args)
    except UsageError as exc:
        print(f"projbundles: error: {exc}", file=sys.stderr)
        return 2
    except (PolySyntaxError, UnknownVariable, FieldError, ZeroDivisionError, ValueError) as exc:
        print(f"projbundles: error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
