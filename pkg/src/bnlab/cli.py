"""``bnlab`` command-line interface.

Exit codes: 0 success, 1 a verification entry failed, 2 usage or input
error, 3 fixture error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import elliptic as ec
from . import llschain as lls
from . import modulipic as mp
from . import schubert as sb
from .errors import BNLabError, InvalidFixture
from .rational import parse_rational, render
from .report import DEFAULT_G_MAX, build_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FIXTURE = 3


class UsageError(Exception):
    pass


class FixtureError(Exception):
    pass


def _fixture(path: str | None) -> ec.NinePointFixture:
    if path is None:
        return ec.nine_point_fixture()
    try:
        return ec.load_fixture(path)
    except InvalidFixture as exc:
        raise FixtureError(str(exc)) from None
    except OSError as exc:
        raise FixtureError(f"cannot read fixture {path}: {exc.strerror}") from None


def _index(r: int, d: int, text: str) -> sb.SchubertIndex:
    try:
        return sb.SchubertIndex.parse(r, d, text)
    except BNLabError as exc:
        raise UsageError(str(exc)) from None


def _pair_of_rationals(text: str, what: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{what} must be two comma-separated rationals, got {text!r}")
    try:
        return parse_rational(parts[0]), parse_rational(parts[1])
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


# -- subcommands -------------------------------------------------------------

def cmd_rho(args) -> int:
    indices = [_index(args.r, args.d, a) for a in args.alpha or []]
    try:
        value = sb.pointed_rho(args.g, args.r, args.d, *indices)
    except BNLabError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    g_max = args.g_max
    if g_max is None:
        env = os.environ.get("BNLAB_GMAX")
        try:
            g_max = int(env) if env else DEFAULT_G_MAX
        except ValueError:
            raise UsageError(f"BNLAB_GMAX must be an integer, got {env!r}") from None
    if g_max < 2:
        raise UsageError(f"--g-max must be at least 2, got {g_max}")
    report = build_report(g_max, _fixture(args.fixture))
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_table(verbose=args.verbose))
    if not report.ok:
        for e in report.failures:
            print(f"FAIL {e.claim_id}: computed={e.computed} expected={e.expected}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_duval(args) -> int:
    if args.g < 1:
        raise UsageError(f"--g must be at least 1, got {args.g}")
    fixture = _fixture(args.fixture)
    P = ec.p10(args.g, fixture)
    if args.json:
        _emit_json({"g": args.g, "curve": {"a": render(fixture.curve.a), "b": render(fixture.curve.b)}, "p10": P.to_json()})
    else:
        print(P)
    return EXIT_OK


_PENCILS = {
    "duval": mp.duval_pencil,
    "iota": mp.iota_pencil,
    "iota_bar": mp.iota_bar_pencil,
    "k3": mp.k3_pencil,
}


def _class_for(name: str, g: int, space: str):
    if name == "z10":
        if g != 10:
            raise UsageError(f"the z10 class lives in genus 10, not g={g}")
        c = mp.z10_class()
    elif name == "bn":
        c = mp.bn_class(g)
    else:
        c = mp.weierstrass_class(g)
    if space == "C":
        return c
    # a family over M_g pairs with classes pulled back from M_g
    m = mp.MgClass.from_dict(g, {n: c[n] for n in mp.generators(g, "M")})
    if mp.pullback_pi(m) != c:
        raise UsageError(f"the {name} class is not pulled back from M_g; pair it with the pointed pencil")
    return m


def cmd_pencil(args) -> int:
    if args.g < 2:
        raise UsageError(f"pencils are tabulated for g >= 2, got g={args.g}")
    pencil = _PENCILS[args.which](args.g)
    if args.cls is None:
        if args.json:
            sys.stdout.write(mp.to_json(pencil))
        else:
            for n, v in zip(pencil.names, pencil.values):
                print(f"{n} = {render(v)}")
        return EXIT_OK
    value = mp.pair(pencil, _class_for(args.cls, args.g, pencil.space))
    if args.json:
        _emit_json({"pencil": args.which, "class": args.cls, "genus": args.g, "pairing": render(value)})
    else:
        print(render(value))
    return EXIT_OK


def cmd_chain(args) -> int:
    alpha = _index(args.r, args.d, args.alpha)
    beta = _index(args.r, args.d, args.beta) if args.beta is not None else None
    try:
        problem = lls.ChainProblem(args.g, args.r, args.d, alpha, beta)
    except (BNLabError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    result = lls.chain_solve(problem)
    if args.json:
        _emit_json({
            "g": args.g,
            "r": args.r,
            "d": args.d,
            "alpha": list(alpha.alpha),
            "beta": None if beta is None else list(beta.alpha),
            "expected_dimension": problem.expected_dimension,
            "dimension": result.dimension,
            "path": [list(gamma.alpha) for gamma in result.path],
        })
        return EXIT_OK
    if result.empty:
        print(f"empty (expected dimension {problem.expected_dimension})")
    else:
        print(f"dimension {result.dimension}")
        print("path: " + " -> ".join(str(gamma) for gamma in result.path) if result.path else "path: (genus one)")
    return EXIT_OK


def cmd_torsion(args) -> int:
    if args.curve is not None:
        a, b = _pair_of_rationals(args.curve, "--curve")
        try:
            curve = ec.EllipticCurveQ(a, b)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        fixture = None
    else:
        fixture = _fixture(args.fixture)
        curve = fixture.curve
    if args.point is not None:
        x, y = _pair_of_rationals(args.point, "--point")
        P = ec.RationalPoint(x, y)
        if not curve.contains(P):
            raise UsageError(f"{P} does not lie on {curve}")
        targets = [("P", P)]
    elif fixture is not None:
        targets = [(f"p{i}", P) for i, P in enumerate(fixture.points, start=1)]
        targets.append(("p1+...+p9", fixture.total()))
    else:
        raise UsageError("--curve needs --point")
    for name, P in targets:
        order = ec.torsion_order(curve, P)
        print(f"{name}: {'non-torsion' if order is None else f'order {order}'}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bnlab", description="Exact Brill-Noether and moduli computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rho", help="Brill-Noether number, optionally with ramification")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", action="append", metavar="A0,A1,...", help="Schubert index; repeatable")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("verify-paper", help="replay every numerical claim")
    p.add_argument("--g-max", type=int, default=None, help=f"genus bound for sweeps (default {DEFAULT_G_MAX} or $BNLAB_GMAX)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--fixture", metavar="PATH")
    p.add_argument("--verbose", action="store_true", help="list every entry in the table")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("duval", help="base point p10 of the genus-g Du Val system")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--fixture", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_duval)

    p = sub.add_parser("pencil", help="pencil numbers and pairings")
    p.add_argument("--which", choices=sorted(_PENCILS), required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=["bn", "weierstrass", "z10"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("chain", help="elliptic-tail recursion for a pointed problem")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", required=True, metavar="A0,A1,...")
    p.add_argument("--beta", metavar="B0,B1,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("torsion", help="torsion orders of rational points")
    p.add_argument("--fixture", metavar="PATH")
    p.add_argument("--point", metavar="X,Y")
    p.add_argument("--curve", metavar="A,B", help="curve y^2 = x^3 + Ax + B (default: the fixture curve)")
    p.set_defaults(func=cmd_torsion)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bnlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FixtureError as exc:
        print(f"bnlab {args.command}: fixture error: {exc}", file=sys.stderr)
        return EXIT_FIXTURE


if __name__ == "__main__":
    sys.exit(main())
