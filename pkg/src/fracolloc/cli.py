"""Command-line front-end.

Subcommands: solve, table, convergence, quad.  Data goes to standard
output (or --output PATH); diagnostics go to standard error.  Exit codes:
0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import (ExpressionSyntaxError, FracollocError, ParameterError,
                     UnknownIdentifierError)
from .problems import builtin, convergence_study, problem_from_expressions
from .quadrature import gauss_jacobi, gauss_legendre, gauss_lobatto_legendre
from .solver import eval_solution, solve

__all__ = ["run", "main"]

_USAGE_ERRORS = (ParameterError, ExpressionSyntaxError, UnknownIdentifierError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits the process on bad flags; the contract wants code 1
    # and no panic, so convert to an exception instead.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fracolloc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_problem_flags(p):
        p.add_argument("--example", type=int, choices=(1, 2, 3))
        p.add_argument("--alpha", type=float)
        p.add_argument("--T", type=float)
        p.add_argument("--a")
        p.add_argument("--b")
        p.add_argument("--f")
        p.add_argument("--exact")

    def add_output_flags(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output")

    for name in ("solve", "table"):
        p = sub.add_parser(name)
        add_problem_flags(p)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--points", default=None, help="grid as lo:hi:step")
        add_output_flags(p)

    p = sub.add_parser("convergence")
    add_problem_flags(p)
    p.add_argument("--N-min", type=int, dest="n_min", required=True)
    p.add_argument("--N-max", type=int, dest="n_max", required=True)
    p.add_argument("--N-step", type=int, dest="n_step", default=1)
    add_output_flags(p)

    p = sub.add_parser("quad")
    p.add_argument("--family", choices=("legendre", "lgl", "jacobi"), required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--q1", type=float)
    p.add_argument("--q2", type=float)
    add_output_flags(p)
    return parser


def _make_problem(args):
    custom = [args.alpha, args.T, args.a, args.b, args.f]
    if args.example is not None:
        if any(v is not None for v in custom) or args.exact is not None:
            raise _UsageError("--example excludes --alpha/--T/--a/--b/--f/--exact")
        return builtin(args.example), f"example {args.example}"
    if any(v is None for v in custom):
        raise _UsageError("need --example or all of --alpha --T --a --b --f")
    spec = problem_from_expressions(args.alpha, args.T, args.a, args.b, args.f,
                                    args.exact)
    return spec, "custom"


def _parse_points(text: str, T: float) -> list[float]:
    if text is None:
        text = f"0:{T!r}:{T / 10.0!r}"
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"--points must be lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (float(part) for part in parts)
    except ValueError:
        raise _UsageError(f"--points must be numeric lo:hi:step, got {text!r}")
    if step <= 0.0 or hi < lo:
        raise _UsageError(f"--points needs hi >= lo and step > 0, got {text!r}")
    count = int((hi - lo) / step + 1e-9) + 1
    return [lo + k * step for k in range(count)]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".17g")


def _emit(args, metadata: dict, header: list[str], rows: list[list]) -> None:
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        payload = "\n".join(lines) + "\n"
    else:
        doc = {
            "metadata": dict(metadata, timestamp=time.strftime(
                "%Y-%m-%dT%H:%M:%SZ", time.gmtime())),
            "rows": [dict(zip(header, row)) for row in rows],
        }
        payload = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_pointwise(args) -> int:
    spec, source = _make_problem(args)
    if args.N < 1:
        raise _UsageError("--N must be at least 1")
    points = _parse_points(args.points, spec.T)
    solution = solve(spec, args.N)
    rows = []
    for x in points:
        approx = eval_solution(solution, x)
        if spec.exact is not None:
            exact = spec.exact(x)
            rows.append([x, approx, exact, abs(approx - exact)])
        else:
            rows.append([x, approx, None, None])
    metadata = {"command": args.command, "problem": source,
                "alpha": spec.alpha, "T": spec.T, "N": args.N}
    _emit(args, metadata, ["t", "approx", "exact", "abs_error"], rows)
    return 0


def _cmd_convergence(args) -> int:
    spec, source = _make_problem(args)
    if spec.exact is None:
        raise _UsageError("convergence needs an exact solution (--exact or --example)")
    if args.n_min < 1 or args.n_max < args.n_min or args.n_step < 1:
        raise _UsageError("need 1 <= N-min <= N-max and N-step >= 1")
    Ns = list(range(args.n_min, args.n_max + 1, args.n_step))
    report = convergence_study(spec, Ns, problem_id=source)
    for N, message in report.failures:
        print(f"solve failed at N={N}: {message}", file=sys.stderr)
    rows = [[r.N, r.l2_error, r.linf_error, r.cond_estimate] for r in report.records]
    metadata = {"command": "convergence", "problem": source, "alpha": spec.alpha,
                "T": spec.T, "slope": report.slope}
    _emit(args, metadata, ["N", "l2_error", "linf_error", "cond_estimate"], rows)
    return 0


def _cmd_quad(args) -> int:
    if args.N < 1:
        raise _UsageError("--N must be at least 1")
    if args.family == "jacobi":
        if args.q1 is None or args.q2 is None:
            raise _UsageError("--family jacobi needs --q1 and --q2")
        rule = gauss_jacobi(args.N, args.q1, args.q2)
    elif args.family == "legendre":
        rule = gauss_legendre(args.N)
    else:
        rule = gauss_lobatto_legendre(args.N)
    rows = [[j, x, w] for j, (x, w) in enumerate(zip(rule.nodes, rule.weights))]
    metadata = {"command": "quad", "family": args.family, "N": args.N,
                "q1": args.q1, "q2": args.q2}
    _emit(args, metadata, ["index", "node", "weight"], rows)
    return 0


def run(argv) -> int:
    """Dispatch a command line; returns the exit code rather than raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command in ("solve", "table"):
            return _cmd_pointwise(args)
        if args.command == "convergence":
            return _cmd_convergence(args)
        return _cmd_quad(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (FracollocError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # the contract: never panic on bad input
        print(f"failure: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
