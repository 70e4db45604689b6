"""Command-line front end for every engine.

Exit codes: 0 on success / verified, 1 when a check fails or a certificate
is refused (the reason is printed), 2 on invalid input.  ``--json`` emits a
machine-readable document; large integers are serialized as decimal strings
so consumers never lose precision.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import determinantal as det
from . import monomial, points, star
from .core import InvalidInputError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise InvalidInputError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(doc: dict, args, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _star_cfg(args) -> star.StarConfig:
    degrees = _parse_int_list(args.degrees) if args.degrees else None
    return star.star_config(n=args.n, h=args.h, degrees=degrees, ambient_dim=args.N)


def _cmd_star_alpha(args) -> int:
    value = star.star_alpha(_star_cfg(args), args.k)
    _emit({"kind": "star-alpha", "n": args.n, "h": args.h, "k": args.k, "alpha": value},
          args, [str(value)])
    return EXIT_OK


def _cmd_star_member(args) -> int:
    member = star.star_member(_star_cfg(args), _parse_int_list(args.exponents), args.k)
    _emit({"kind": "star-member", "k": args.k, "member": member},
          args, ["true" if member else "false"])
    return EXIT_OK if member else EXIT_FAILED


def _cmd_star_waldschmidt(args) -> int:
    value = star.star_waldschmidt(_star_cfg(args))
    _emit(
        {
            "kind": "star-waldschmidt",
            "n": args.n,
            "h": args.h,
            "numerator": value.numerator,
            "denominator": value.denominator,
        },
        args,
        [_fraction_str(value)],
    )
    return EXIT_OK


def _cmd_star_certify(args) -> int:
    cfg = _star_cfg(args)
    exponents = _parse_int_list(args.exponents)
    try:
        cert = star.star_certify_containment(cfg, exponents, m=args.m, r=args.r, c=args.c)
    except star.NotAMemberError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAILED
    doc = cert.to_dict()
    _emit(
        doc,
        args,
        [
            f"base vector: {list(cert.base)}",
            f"tight subset: {list(cert.tight_subset)}",
            f"leftover degree {cert.leftover_degree} >= required {cert.required_degree}",
            f"verified: {str(doc['verified']).lower()}",
        ],
    )
    return EXIT_OK if doc["verified"] else EXIT_FAILED


def _det_shape(args) -> det.MatrixShape:
    if args.flavor == det.GENERIC:
        if args.q is None:
            raise InvalidInputError("generic flavor needs --q")
        return det.generic_shape(args.p, args.q, args.t)
    if args.q is not None:
        raise InvalidInputError(f"{args.flavor} flavor takes no --q")
    if args.flavor == det.SYMMETRIC:
        return det.symmetric_shape(args.p, args.t)
    return det.pfaffian_shape(args.p, args.t)


def _cmd_det_alpha(args) -> int:
    shape = _det_shape(args)
    value = det.det_alpha(shape, args.k)
    _emit({"kind": "det-alpha", "shape": shape.to_dict(), "k": args.k, "alpha": value},
          args, [str(value)])
    return EXIT_OK


def _cmd_det_omega(args) -> int:
    shape = _det_shape(args)
    value = det.det_omega(shape, args.m)
    _emit({"kind": "det-omega", "shape": shape.to_dict(), "m": args.m, "omega": value},
          args, [str(value)])
    return EXIT_OK


def _cmd_det_member(args) -> int:
    shape = _det_shape(args)
    member = det.det_member(shape, _parse_int_list(args.sizes), args.k)
    _emit({"kind": "det-member", "shape": shape.to_dict(), "k": args.k, "member": member},
          args, ["true" if member else "false"])
    return EXIT_OK if member else EXIT_FAILED


def _cmd_det_certify(args) -> int:
    shape = _det_shape(args)
    sizes = _parse_int_list(args.sizes)
    try:
        cert = det.det_certify_containment(
            shape, sizes, m=args.m, r=args.r, c=args.c, mode=args.mode
        )
    except (star.NotAMemberError, det.FeasibilityError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAILED
    doc = cert.to_dict()
    lines = [
        f"groups: {[g.to_dict() for g in cert.groups]}",
        f"leftover indices: {list(cert.leftover_indices)}",
        f"budget {cert.madic_budget} >= required {cert.required_budget}",
        f"verified: {str(doc['verified']).lower()}",
    ]
    _emit(doc, args, lines)
    return EXIT_OK if doc["verified"] else EXIT_FAILED


def _cmd_det_demailly(args) -> int:
    shape = _det_shape(args)
    report = det.det_demailly_check(shape, args.m, args.n_max)
    doc = {
        "kind": "det-demailly",
        "shape": shape.to_dict(),
        "m": args.m,
        "rows": [
            {
                "n": row.n,
                "lhs": _fraction_str(row.lhs),
                "rhs": _fraction_str(row.rhs),
                "pass": row.ok,
            }
            for row in report.rows
        ],
        "pass": report.passed,
    }
    lines = [
        f"n={row.n}: {_fraction_str(row.lhs)} >= {_fraction_str(row.rhs)}: "
        f"{'pass' if row.ok else 'FAIL'}"
        for row in report.rows
    ] + [f"overall: {'pass' if report.passed else 'FAIL'}"]
    _emit(doc, args, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_points_certify(args) -> int:
    try:
        cert = points.certify_demailly_general_points(args.N, args.m, args.s)
    except points.HypothesisError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAILED
    doc = cert.to_dict()
    lines = [
        f"k={cert.k} w={cert.w} reg_bound={cert.reg_bound} r_threshold={cert.r_threshold}",
        f"binomial inequality holds: {str(cert.lemma24_ok).lower()}",
        f"granted: {str(cert.granted).lower()}",
    ]
    _emit(doc, args, lines)
    return EXIT_OK if cert.granted else EXIT_FAILED


def _cmd_points_lemma24(args) -> int:
    ok = points.lemma24_check(args.N, args.m, args.k)
    _emit({"kind": "lemma24", "N": args.N, "m": args.m, "k": args.k, "holds": ok},
          args, ["true" if ok else "false"])
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_points_sweep(args) -> int:
    report = points.lemma24_sweep(
        range(args.N_min, args.N_max + 1),
        range(args.m_min, args.m_max + 1),
        args.k_extra_max,
    )
    doc = {
        "kind": "lemma24-sweep",
        "rows": [
            {
                "N": row.n_dim,
                "m": row.m,
                "observed_min_k": row.observed_min_k,
                "guaranteed_k": row.guaranteed_k,
                "holds_from_guaranteed": row.holds_from_guaranteed,
            }
            for row in report.rows
        ],
        "pass": report.passed,
    }
    lines = [
        f"N={row.n_dim} m={row.m}: observed k>={row.observed_min_k}, "
        f"guaranteed k>={row.guaranteed_k}: "
        f"{'pass' if row.holds_from_guaranteed else 'FAIL'}"
        for row in report.rows
    ]
    _emit(doc, args, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_points_fermat(args) -> int:
    report = points.fermat_checks(args.n, args.k_max)
    doc = {
        "kind": "fermat-checks",
        "n": args.n,
        "rows": [
            {
                "k": row.k,
                "display_lhs": str(row.display_lhs),
                "display_rhs": str(row.display_rhs),
                "display_fails": row.display_fails,
                "demailly_triple_ok": row.demailly_triple_ok,
                "demailly_shifted_ok": row.demailly_shifted_ok,
            }
            for row in report.rows
        ],
        "pass": report.passed,
    }
    lines = [
        f"k={row.k}: {row.display_lhs} < {row.display_rhs}: "
        f"{'confirmed' if row.display_fails else 'NOT confirmed'}; "
        f"demailly checks: {row.demailly_triple_ok and row.demailly_shifted_ok}"
        for row in report.rows
    ] + [f"overall: {'pass' if report.passed else 'FAIL'}"]
    _emit(doc, args, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_oracle_crosscheck(args) -> int:
    try:
        report = monomial.crosscheck_star(args.n, args.h, args.k, args.deg_bound)
    except monomial.BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAILED
    doc = {
        "kind": "oracle-crosscheck",
        "n": args.n,
        "h": args.h,
        "k": args.k,
        "deg_bound": args.deg_bound,
        "checked": report.checked,
        "mismatches": [list(v) for v in report.mismatches],
        "alpha_oracle": report.alpha_oracle,
        "alpha_engine": report.alpha_engine,
        "pass": report.passed,
    }
    lines = [
        f"checked {report.checked} vectors, {len(report.mismatches)} mismatches",
        f"alpha oracle={report.alpha_oracle} engine={report.alpha_engine}",
        f"overall: {'pass' if report.passed else 'FAIL'}",
    ]
    _emit(doc, args, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    parser.add_argument("--seed", type=int, default=None,
                        help="property-sample seed where applicable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcontain",
        description="Exact symbolic-power invariants and containment certificates",
    )
    top = parser.add_subparsers(dest="engine", required=True)

    star_p = top.add_parser("star", help="star-configuration engine")
    star_sub = star_p.add_subparsers(dest="op", required=True)

    def star_common(p):
        p.add_argument("--n", type=int, required=True, help="number of forms")
        p.add_argument("--h", type=int, required=True, help="codimension")
        p.add_argument("--degrees", type=str, default=None,
                       help="comma-separated form degrees (default all 1)")
        p.add_argument("--N", type=int, default=None, help="ambient projective dimension")
        _add_common(p)

    p = star_sub.add_parser("alpha")
    star_common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_star_alpha)

    p = star_sub.add_parser("member")
    star_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exponents", type=str, required=True)
    p.set_defaults(func=_cmd_star_member)

    p = star_sub.add_parser("waldschmidt")
    star_common(p)
    p.set_defaults(func=_cmd_star_waldschmidt)

    p = star_sub.add_parser("certify")
    star_common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--exponents", type=str, required=True)
    p.set_defaults(func=_cmd_star_certify)

    det_p = top.add_parser("det", help="determinantal / pfaffian engine")
    det_sub = det_p.add_subparsers(dest="op", required=True)

    def det_common(p):
        p.add_argument("--flavor", choices=det.FLAVORS, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, default=None)
        p.add_argument("--t", type=int, required=True)
        _add_common(p)

    p = det_sub.add_parser("alpha")
    det_common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_det_alpha)

    p = det_sub.add_parser("omega")
    det_common(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_det_omega)

    p = det_sub.add_parser("member")
    det_common(p)
    p.add_argument("--sizes", type=str, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_det_member)

    p = det_sub.add_parser("certify")
    det_common(p)
    p.add_argument("--sizes", type=str, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--mode", choices=det.MODES, default=det.MODE_THEOREM34)
    p.set_defaults(func=_cmd_det_certify)

    p = det_sub.add_parser("demailly")
    det_common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.set_defaults(func=_cmd_det_demailly)

    points_p = top.add_parser("points", help="general-points Demailly certifier")
    points_sub = points_p.add_subparsers(dest="op", required=True)

    p = points_sub.add_parser("certify")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_points_certify)

    p = points_sub.add_parser("lemma24")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_points_lemma24)

    p = points_sub.add_parser("sweep")
    p.add_argument("--N-min", dest="N_min", type=int, default=3)
    p.add_argument("--N-max", dest="N_max", type=int, default=6)
    p.add_argument("--m-min", dest="m_min", type=int, default=1)
    p.add_argument("--m-max", dest="m_max", type=int, default=5)
    p.add_argument("--k-extra-max", dest="k_extra_max", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=_cmd_points_sweep)

    p = points_sub.add_parser("fermat")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", dest="k_max", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=_cmd_points_fermat)

    oracle_p = top.add_parser("oracle", help="monomial brute-force oracle")
    oracle_sub = oracle_p.add_subparsers(dest="op", required=True)

    p = oracle_sub.add_parser("crosscheck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--deg-bound", dest="deg_bound", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=_cmd_oracle_crosscheck)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
