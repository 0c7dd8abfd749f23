"""Command line front end.

    dlaplace solve  "a[n+2] = a[n+1] + a[n]; a[1] = 1; a[2] = 1"
    dlaplace verify "a[n+1] = 2*a[n] + 1; a[1] = 1" --upto 50
    dlaplace table

Exit codes: 0 success, 1 parse or semantic error in the recurrence text,
2 the problem is outside the engine's exact capabilities, 3 a verification
or numeric check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import parse_program
from .errors import (CapabilityError, CheckFailed, DivergenceGuard,
                     DlaplaceError, ParseError, SemanticError,
                     SeriesCapExceeded, VerificationFailed)
from .numeric import DEFAULT_TOLERANCE, check_closed_form_pair
from .solver import solve_ivp, verify_solution
from .transforms import geometric, n_power

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAPABILITY = 2
EXIT_VERIFY = 3


def _read_program(args: argparse.Namespace) -> str:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            return handle.read()
    if args.program is None or args.program == "-":
        return sys.stdin.read()
    return args.program


def _display_var(display: str) -> str:
    return "e^s" if display == "exps" else "t"


def cmd_solve(args: argparse.Namespace) -> int:
    program = parse_program(_read_program(args))
    report = solve_ivp(program.to_spec(), verify_upto=args.verify_upto)
    if args.json:
        print(json.dumps(report.to_json_dict(args.terms), indent=2))
        return EXIT_OK
    var = _display_var(args.display)
    values = ", ".join(str(v) for v in report.values(args.terms))
    print(f"closed form: {report.closed_form_text()}")
    print(f"transform:   {report.transform.render(var)}")
    print(f"values:      {values}")
    print(f"verified:    n <= {report.verified_upto} (exact)")
    if report.coefficient_decomposition is not None:
        first, second = report.coefficient_decomposition
        print(f"a(1) basis:  {first}")
        print(f"a(2) basis:  {second}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    program = parse_program(_read_program(args))
    spec = program.to_spec()
    report = solve_ivp(spec, verify_upto=args.upto)
    exact = verify_solution(spec, report.closed_form, upto=args.upto)
    if not exact.passed:
        raise VerificationFailed(exact.detail)
    grid = tuple(float(x) for x in args.s_grid.split(","))
    numeric = check_closed_form_pair(report.closed_form, report.transform,
                                     grid, args.tol)
    if args.json:
        payload = {
            "exact": {"passed": exact.passed, "upto": exact.checked_upto},
            "numeric": numeric.to_json_dict(),
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"exact:   recurrence and initial values hold for "
          f"n <= {exact.checked_upto}")
    for entry in numeric.entries:
        print(f"numeric: s = {entry.s:g}: series({entry.terms} terms) vs "
              f"transform differ by {entry.discrepancy:.2e} "
              f"(tolerance {args.tol:g})")
    print("PASS")
    return EXIT_OK


def _table_rows(var: str) -> list[tuple[str, str]]:
    one = geometric(1)
    five = geometric(5)
    rows = [
        ("1", one.render(var)),
        ("a^(n-1)", "1/(e^s - a)" if var == "e^s" else "1/(t - a)"),
        ("5^(n-1)", five.render(var)),
        ("n", n_power(1).render(var)),
        ("n^2", n_power(2).render(var)),
        ("n^3", n_power(3).render(var)),
    ]
    es = var == "e^s"
    F = "F(s)" if es else "F(t)"
    base = "e^s" if es else "t"
    k_pow = "e^(ks)" if es else "t^k"
    ki_pow = "e^((k-i)s)" if es else "t^(k-i)"
    rows += [
        ("f(n+k)", f"{k_pow}*{F} - sum_(i=1..k) f(i)*{ki_pow}"),
        ("f(n+1) - f(n)", f"({base} - 1)*{F} - f(1)"),
        ("n*f(n)", f"-d{F}/ds"),
        ("(f*g)(n)", f"{F}G(s)" if es else f"{F}G(t)"),
        ("sum_(k=1..n-1) f(k)", f"{F}/({base} - 1)"),
        ("1/n", "s - ln(e^s - 1)"),
    ]
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    for lhs, rhs in _table_rows(_display_var(args.display)):
        print(f"{lhs} <-> {rhs}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlaplace",
        description="Exact transform calculus for linear recurrences.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser(
        "solve", help="solve an IVP and print its closed form")
    solve.add_argument("program", nargs="?",
                       help="recurrence text; '-' or absent reads stdin")
    solve.add_argument("--file", help="read the recurrence text from a file")
    solve.add_argument("--terms", type=int, default=10,
                       help="how many values to print (default 10)")
    solve.add_argument("--verify-upto", type=int, default=64,
                       help="exact self-check horizon (default 64)")
    solve.add_argument("--json", action="store_true",
                       help="emit the full report as JSON")
    solve.add_argument("--display", choices=("t", "exps"), default="exps",
                       help="write transforms in t or in e^s (default)")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser(
        "verify", help="solve, then check the answer exactly and numerically")
    verify.add_argument("program", nargs="?",
                        help="recurrence text; '-' or absent reads stdin")
    verify.add_argument("--file", help="read the recurrence text from a file")
    verify.add_argument("--upto", type=int, default=64,
                        help="exact verification horizon (default 64)")
    verify.add_argument("--s-grid", default="1.0,1.5,2.0",
                        help="comma-separated sample points (default "
                             "1.0,1.5,2.0)")
    verify.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                        help="numeric tolerance (default 1e-9)")
    verify.add_argument("--json", action="store_true",
                        help="emit the verification report as JSON")
    verify.set_defaults(handler=cmd_verify)

    table = sub.add_parser(
        "table", help="print the rule table of the calculus")
    table.add_argument("--display", choices=("t", "exps"), default="exps",
                       help="write transforms in t or in e^s (default)")
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, SemanticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapabilityError, DivergenceGuard, SeriesCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (VerificationFailed, CheckFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except DlaplaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
