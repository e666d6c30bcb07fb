"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .combinat import Partition, parse_composition
from .parser import parse_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _composition(text: str):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid composition {text!r}: {exc}") from None


def _partition(text: str):
    nu = _composition(text)
    try:
        return Partition(nu)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(doc, out) -> None:
    out.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _poly_doc(nu, poly) -> dict:
    from .sympoly import render

    return {
        "nu": None if nu is None else list(nu),
        "poly": render(poly),
        "terms": poly.to_json(),
    }


# -- subcommands -------------------------------------------------------------------


def cmd_kostka(args, out) -> int:
    from .kostka import kostka_foulkes, kostka_number

    if args.number:
        _emit(kostka_number(args.lam, args.mu), out)
    else:
        _emit(kostka_foulkes(args.lam, args.mu).to_json(), out)
    return EXIT_OK


def cmd_coinv_dim(args, out) -> int:
    from .coinvariants import coinv_graded_dim

    if args.method != "both":
        _emit(coinv_graded_dim(args.lam, args.nu, args.method).to_json(), out)
        return EXIT_OK
    linear = coinv_graded_dim(args.lam, args.nu, "linear")
    formula = coinv_graded_dim(args.lam, args.nu, "formula")
    if linear != formula:
        _emit({"linear": linear.to_json(), "formula": formula.to_json()}, out)
        print("error: the two methods disagree", file=sys.stderr)
        return EXIT_FAIL
    _emit(linear.to_json(), out)
    return EXIT_OK


def cmd_weyl_char(args, out) -> int:
    from .weylchar import weyl_graded_character

    table = weyl_graded_character(args.lam)
    if args.csv:
        out.write(table.to_csv())
    else:
        _emit(table.to_json(), out)
    return EXIT_OK


def cmd_weyl_dim(args, out) -> int:
    from .weylchar import weyl_weight_graded_dim

    _emit(weyl_weight_graded_dim(args.lam, args.nu).to_json(), out)
    return EXIT_OK


def cmd_act(args, out) -> int:
    from .currentaction import WeightVector, apply_generator, GeneratorSymbol

    if args.j < 0:
        raise UsageError("--j must be non-negative")
    if not 1 <= args.i < len(args.nu):
        raise UsageError(f"--i must lie in 1..{len(args.nu) - 1}")
    p = parse_poly(args.poly, args.nu)
    result = apply_generator(GeneratorSymbol(args.gen, args.i, args.j), WeightVector(args.nu, p.poly), args.convention)
    if not result.nu:
        _emit({"nu": None, "poly": "0", "terms": []}, out)
    else:
        _emit(_poly_doc(result.nu, result.poly), out)
    return EXIT_OK


def cmd_theta(args, out) -> int:
    from .thetafunctor import bubble_image, pi_image

    if not 1 <= args.i < len(args.nu):
        raise UsageError(f"--i must lie in 1..{len(args.nu) - 1}")
    if args.what == "bubble":
        value = bubble_image(args.i, args.nu, args.r, args.orientation)
    else:
        if args.j < 0:
            raise UsageError("--j must be non-negative")
        value = pi_image(args.i, args.j, args.nu)
    _emit(_poly_doc(args.nu, value.poly), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .harness import run_suite

    if args.n < 2 or args.N < 0 or args.cutoff < 0 or args.jmax < 0:
        raise UsageError("need n >= 2 and non-negative N, cutoff, jmax")
    reports = run_suite(args.suite, args.n, args.N, args.cutoff, args.jmax, args.convention)
    if args.json:
        _emit([r.to_json() for r in reports], out)
    else:
        for r in reports:
            out.write(r.table() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- argument parsing ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lambda,mu}(t)")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_composition, required=True)
    p.add_argument("--number", action="store_true", help="print the Kostka number instead")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("coinv-dim", help="graded dimension of the coinvariant quotient")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--nu", type=_composition, required=True)
    p.add_argument("--method", choices=("linear", "formula", "both"), default="both")
    p.set_defaults(func=cmd_coinv_dim)

    p = sub.add_parser("weyl-char", help="graded character table of the local Weyl module")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_weyl_char)

    p = sub.add_parser("weyl-dim", help="graded dimension of one weight space")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--nu", type=_composition, required=True)
    p.set_defaults(func=cmd_weyl_dim)

    p = sub.add_parser("act", help="apply E_{i,j}, F_{i,j} or H_{i,j} to a polynomial")
    p.add_argument("--gen", choices=("E", "F", "H"), required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--nu", type=_composition, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--convention", choices=("literal", "signed"), default="literal")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("theta", help="bubble and pi values in P_nu")
    tsub = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    b = tsub.add_parser("bubble")
    b.add_argument("--i", type=int, required=True)
    b.add_argument("--nu", type=_composition, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--orientation", choices=("cw", "ccw"), default="cw")
    b.set_defaults(func=cmd_theta)
    q = tsub.add_parser("pi")
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--nu", type=_composition, required=True)
    q.set_defaults(func=cmd_theta)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=("current", "theta", "coinv", "kostka", "weyl", "all"), default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=3)
    p.add_argument("--jmax", type=int, default=2)
    p.add_argument("--convention", choices=("literal", "signed"), default="literal")
    p.add_argument("--json", action="store_true", help="JSON report instead of a table")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
