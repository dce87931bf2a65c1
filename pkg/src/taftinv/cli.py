"""Command-line interface: taftinv <subcommand> ...

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .freealg import SQRT_CHOICES, ActionError, ActionSpec, classify_actions
from .invariants import find_generators, full_invariants, x_invariants
from .parsing import ParseError, parse_element
from .series import (
    gorenstein_congruence,
    gorenstein_table,
    hdet_a,
    hdet_ax,
    hilbert_Ax,
    known_closed_form,
    molien,
    reflection_classify,
    stanley_test,
    table_csv,
    table_grid,
)
from .taft import act_g, act_x

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--case", type=int, choices=(1, 2), default=1)
    p.add_argument("--sqrt", choices=SQRT_CHOICES, default="principal")


def _spec(args, out) -> ActionSpec:
    spec = ActionSpec(args.n, args.k, args.case, args.sqrt)
    if spec.case == 2:
        print("note: case-2 action normalized to case 1 by swapping u and v", file=out)
        spec = spec.normalized()
    print(f"# n={spec.n} k={spec.k} sqrt={spec.sqrt_choice}: sqrt(omega) has order {spec.sqrt_order}", file=out)
    return spec


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taftinv", description="Taft algebra actions on down-up algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="list all actions for a given n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("act", help="apply g or x to an element")
    _spec_args(p)
    p.add_argument("--op", choices=("g", "x"), required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--times", type=int, default=1)

    p = sub.add_parser("invariants", help="graded invariants and generators")
    _spec_args(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--x-only", action="store_true")
    p.add_argument("--generators", action="store_true")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("hilbert", help="Hilbert series of the invariant ring")
    _spec_args(p)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--terms", type=int, default=12)

    p = sub.add_parser("gorenstein", help="Gorenstein verdict and homological determinants")
    _spec_args(p)

    p = sub.add_parser("table", help="Gorenstein table in the order-2n regime")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("grid", "csv"), default="grid")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", choices=("identities", "presentations", "molien", "table", "all"), default="all")
    return parser


def cmd_classify(args, out) -> int:
    specs = classify_actions(args.n)
    if args.format == "json":
        print(json.dumps([s.describe() for s in specs], indent=2), file=out)
        return EXIT_OK
    for s in specs:
        print(
            f"case={s.case} k={s.k} sqrt={s.sqrt_choice:9s} order={s.sqrt_order:<3d} "
            f"alpha = {s.alpha} ; beta = {s.beta}",
            file=out,
        )
    return EXIT_OK


def cmd_act(args, out) -> int:
    spec = _spec(args, out)
    if args.times < 0:
        raise UsageError("--times must be nonnegative")
    e = parse_element(args.element, spec)
    op = act_g if args.op == "g" else act_x
    for _ in range(args.times):
        e = op(spec, e)
    print(e.to_text(), file=out)
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    spec = _spec(args, out)
    top = args.max_degree if args.max_degree is not None else 4 * spec.n + 2
    if top < 0:
        raise UsageError("--max-degree must be nonnegative")
    flavor = "x-only" if args.x_only else "full"
    if args.generators:
        rep = find_generators(spec, top, flavor)
        if args.format == "json":
            print(rep.to_json(), file=out)
        else:
            print(f"generator degrees: {rep.degrees}", file=out)
            for d, g in rep.generators:
                print(f"  [{d}] {g.to_text()}", file=out)
            bad = [d for d, (a, b) in rep.dimension_table.items() if a != b]
            print("products span every degree" if not bad else f"gaps in degrees {bad}", file=out)
        return EXIT_OK
    fn = x_invariants if args.x_only else full_invariants
    payload = []
    for d in range(top + 1):
        basis = fn(spec, d)
        payload.append({"degree": d, "dim": basis.dim, "vectors": [v.to_text() for v in basis.vectors]})
    if args.format == "json":
        print(json.dumps({"flavor": flavor, "degrees": payload}, indent=2), file=out)
    else:
        for row in payload:
            print(f"degree {row['degree']}: dim {row['dim']}", file=out)
            for v in row["vectors"]:
                print(f"  {v}", file=out)
    return EXIT_OK


def cmd_hilbert(args, out) -> int:
    spec = _spec(args, out)
    h = molien(spec).cancel_factors()
    print(f"A^x: {hilbert_Ax(spec).to_text()}", file=out)
    print(f"A^T: {h.to_text()}", file=out)
    print(f"coefficients: {h.series(args.terms - 1)}", file=out)
    if args.closed_form:
        known = known_closed_form(spec)
        if known is None:
            print("closed form: none known for these parameters", file=out)
        else:
            label, cf = known
            verdict = "agrees" if cf == h else "DISAGREES"
            print(f"closed form ({label}): {cf.to_text()} -- {verdict}", file=out)
            if cf != h:
                return EXIT_VERIFY
    return EXIT_OK


def cmd_gorenstein(args, out) -> int:
    spec = _spec(args, out)
    v = stanley_test(molien(spec))
    w_exp = lambda c: next(i for i in range(spec.n) if spec.omega**i == c)  # noqa: E731
    print(f"A^T: {v.describe()}", file=out)
    print(f"hdet on A: omega^{w_exp(hdet_a(spec))}", file=out)
    if spec.regime == "2n":
        print(f"hdet of g on A^x: omega^{w_exp(hdet_ax(spec))}", file=out)
    else:
        rc = reflection_classify(spec.n, spec.k)
        print(f"d = {rc.d}, e = {rc.e}, case {rc.case}", file=out)
        print(f"congruence holds: {gorenstein_congruence(spec.n, spec.k)}", file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    cells = gorenstein_table(args.n_max, args.workers)
    print(table_csv(cells) if args.format == "csv" else table_grid(cells), end="", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .verify import run_suite

    results = run_suite(args.suite)
    for r in results:
        print(r.line(), file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


COMMANDS = {
    "classify": cmd_classify,
    "act": cmd_act,
    "invariants": cmd_invariants,
    "hilbert": cmd_hilbert,
    "gorenstein": cmd_gorenstein,
    "table": cmd_table,
    "verify": cmd_verify,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ActionError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
