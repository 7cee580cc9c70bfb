"""Command-line front end.

Exit codes: 0 all checks pass, 1 at least one identity fails, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import reciprocity as rc
from .exact import format_rat, parse_rat, poly_to_text
from .integrals import (
    ProductIntegral,
    euler_product_integral,
    euler_product_integral_closed,
    mixed_product_integral_closed,
    product_integral_oracle,
)
from .laplace import LaplaceCase, laplace_closed, laplace_closed_derivative, laplace_moment_numeric, laplace_numeric
from .special import Family, bernoulli_number, euler_number, higher_order_poly
from .suites import DEFAULT_SEED, resolve, run_suite


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_range(text: str) -> list[int]:
    """``"3"`` or an inclusive range ``"0..4"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_poly(args) -> int:
    p = higher_order_poly(args.family, args.m, args.alpha)
    if args.at is not None:
        print(format_rat(p(args.at)))
    elif args.json:
        print(p.to_json())
    else:
        print(poly_to_text(p))
    return 0


def cmd_number(args) -> int:
    if args.family is Family.BERNOULLI:
        print(format_rat(bernoulli_number(args.m)))
    else:
        print(euler_number(args.m))
    return 0


def cmd_integral(args) -> int:
    text = sys.stdin.read() if args.spec == "-" else args.spec
    try:
        pi = ProductIntegral.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid integral spec: {exc}") from None
    try:
        if args.oracle:
            value = product_integral_oracle(pi)
        elif args.mu is not None:
            value = euler_product_integral(pi, args.mu)
        elif all(f.family is Family.EULER for f in pi.factors):
            value = euler_product_integral_closed(pi)
        else:
            value = mixed_product_integral_closed(pi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_rat(value))
    return 0


def _overrides(args) -> dict:
    ov = {}
    for name in ("m", "n", "r", "c", "d", "b"):
        v = getattr(args, name, None)
        if v is not None:
            ov[name] = v
    for name in ("x", "y"):
        v = getattr(args, name, None)
        if v is not None:
            ov[name] = [v]
    if args.samples is not None:
        ov["samples"] = args.samples
    ov["seed"] = args.seed
    return ov


def cmd_verify(args) -> int:
    try:
        suites = resolve(args.suite)
    except KeyError:
        raise UsageError(f"unknown identity id {args.suite!r}; see 'list'") from None
    ov = _overrides(args)
    print(f"seed {args.seed}", file=sys.stderr)
    total = failures = 0
    out = sys.stdout
    try:
        for suite in suites:
            for rep in run_suite(suite, ov):
                total += 1
                failures += not rep.passed
                out.write(rep.to_json() + "\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.flush()
    print(f"{total} checks, {failures} failures", file=sys.stderr)
    return 1 if failures else 0


def cmd_list(args) -> int:
    from .suites import ALIASES, SUITES
    for sid, suite in SUITES.items():
        print(f"{sid:26s} {suite.summary}")
    for alias, target in ALIASES.items():
        print(f"{alias:26s} alias of {target}")
    return 0


def _emit(reports) -> int:
    ok = True
    for rep in reports:
        print(rep.to_json())
        ok &= rep.passed
    return 0 if ok else 1


def cmd_dedekind(args) -> int:
    try:
        p = rc.SumParams(args.r, args.c, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.value:
        print(format_rat(rc.dedekind_T(p)))
        return 0
    return _emit([rc.check_dedekind_reciprocity(p)])


def cmd_hardy(args) -> int:
    try:
        p = rc.SumParams(args.r, args.c, args.d)
        if args.value:
            print(json.dumps({"s3": format_rat(rc.hardy_s3(p)), "s4": format_rat(rc.hardy_s4(p))}))
            return 0
        return _emit([rc.check_hardy_reciprocity(p)])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_laplace(args) -> int:
    try:
        case = LaplaceCase(args.n, args.s, args.t, args.tol)
        if args.m:
            numeric = laplace_moment_numeric(args.m, case)
            closed = laplace_closed_derivative(args.m, case)
        else:
            numeric = laplace_numeric(case)
            closed = laplace_closed(case)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    diff = abs(closed - numeric)
    print(f"closed  {closed!r}")
    print(f"numeric {numeric!r}")
    print(f"diff    {diff!r}")
    if not case.in_domain:
        print("note: |s/t| >= pi, outside the convergence domain of the series derivation", file=sys.stderr)
    return 0 if diff < args.tol else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bepoly", description="Exact higher-order Bernoulli/Euler computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print B_m^(alpha)(x) or E_m^(alpha)(x)")
    p.add_argument("family", type=_family)
    p.add_argument("m", type=int)
    p.add_argument("alpha", type=_rat, nargs="?", default=Fraction(1))
    p.add_argument("--at", type=_rat, help="evaluate at this rational instead")
    p.add_argument("--json", action="store_true", help="coefficients as a JSON array, constant term first")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("number", help="classical Bernoulli number B_m or Euler number E_m")
    p.add_argument("family", type=_family)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("integral", help="exact integral of a product of polynomials")
    p.add_argument("spec", help="ProductIntegral JSON, or - for stdin")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", help="closed form (default)")
    mode.add_argument("--oracle", action="store_true", help="expand, multiply and integrate")
    mode.add_argument("--mu", type=int, help="truncated form with exact remainder")
    p.set_defaults(func=cmd_integral)

    for name in ("identity", "verify"):
        p = sub.add_parser(name, help="run an identity suite ('all' for every suite)")
        p.add_argument("suite")
        for flag in ("m", "n", "r", "c", "d", "b"):
            p.add_argument(f"--{flag}", type=_int_range, help="pin this grid axis (value or a..b)")
        p.add_argument("--x", type=_rat)
        p.add_argument("--y", type=_rat)
        p.add_argument("--samples", type=int, help="sample count for sampled suites")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list identity ids")
    p.set_defaults(func=cmd_list)

    for name, func, what in (("dedekind", cmd_dedekind, "T_r(c,d)"), ("hardy", cmd_hardy, "s3 and s4")):
        p = sub.add_parser(name, help=f"reciprocity check for {what}")
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--c", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--value", action="store_true", help="print the sum(s) only")
        p.set_defaults(func=func)

    p = sub.add_parser("laplace", help="Laplace transform of the periodic Euler function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--m", type=int, default=0, help="derivative order in s (moment check)")
    p.set_defaults(func=cmd_laplace)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bepoly: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
