"""Benchmark problems, expression-defined problems, error norms, and
convergence studies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._expr import (ExprAst, eval_expr, expr_to_field, format_expr,
                    parse_expr)
from ._special import erfc, gamma_fn
from .errors import FracollocError, ParameterError
from .quadrature import gauss_legendre
from .solver import ProblemSpec, SpectralSolution, eval_solution, solve

__all__ = [
    "ExprAst",
    "ConvergenceRecord",
    "ConvergenceReport",
    "builtin",
    "parse_expr",
    "format_expr",
    "eval_expr",
    "problem_from_expressions",
    "error_norms",
    "convergence_study",
]

_SQRT_PI = math.sqrt(math.pi)
_GAMMA_2_3 = gamma_fn(2.0 / 3.0)


def _b1_a(t):
    return 0.01 * t**2.5


def _b1_f(t):
    return _SQRT_PI * (1.0 + t) ** -1.5 - 0.02 * t**3 / (1.0 + t)


def _b1_exact(t):
    return _SQRT_PI * (1.0 + t) ** -1.5


def _b2_f(t):
    return _GAMMA_2_3 * t - t ** (8.0 / 3.0) / 40.0


def _b2_exact(t):
    return _GAMMA_2_3 * t


def _b3_f(t):
    return 2.0 * math.sqrt(t / math.pi)


def _b3_exact(t):
    return 1.0 - math.exp(t) * erfc(math.sqrt(t))


def builtin(problem_id: int) -> ProblemSpec:
    """The three built-in benchmark problems on [0, 1].

    1: alpha = 1/2, a(t) = 0.01 t^(5/2), b = 1; exact sqrt(pi) (1+t)^(-3/2).
    2: alpha = 2/3, a = 1/27, b(s) = s; exact Gamma(2/3) t.
    3: alpha = 1/2, a = -1, b = 1, f = 2 sqrt(t/pi);
       exact 1 - e^t erfc(sqrt t).
    """
    if problem_id == 1:
        return ProblemSpec(alpha=0.5, T=1.0, a=_b1_a, b=lambda t: 1.0,
                           f=_b1_f, exact=_b1_exact)
    if problem_id == 2:
        return ProblemSpec(alpha=2.0 / 3.0, T=1.0, a=lambda t: 1.0 / 27.0,
                           b=lambda s: s, f=_b2_f, exact=_b2_exact)
    if problem_id == 3:
        return ProblemSpec(alpha=0.5, T=1.0, a=lambda t: -1.0, b=lambda t: 1.0,
                           f=_b3_f, exact=_b3_exact)
    raise ParameterError(f"unknown builtin problem id {problem_id!r}")


def problem_from_expressions(alpha: float, T: float, a: str, b: str, f: str,
                             exact: Optional[str] = None) -> ProblemSpec:
    """Build a ProblemSpec from expression sources in the variable t."""
    return ProblemSpec(
        alpha=alpha, T=T,
        a=expr_to_field(a), b=expr_to_field(b), f=expr_to_field(f),
        exact=expr_to_field(exact) if exact is not None else None)


_LINF_GRID_SIZE = 1001


def error_norms(s: SpectralSolution, exact) -> tuple[float, float]:
    """(L2, Linf) distance between the computed solution and a reference.

    Linf is taken over a fixed 1001-point uniform grid on [0, T]; L2 comes
    from a (2N+16)-point Gauss-Legendre rule mapped to [0, T].
    """
    T = s.T
    grid = np.linspace(0.0, T, _LINF_GRID_SIZE)
    linf = max(float(abs(eval_solution(s, x) - exact(x))) for x in grid)

    rule = gauss_legendre(2 * s.N + 16)
    acc = 0.0
    for node, weight in zip(rule.nodes, rule.weights):
        x = T * (node + 1.0) / 2.0
        acc += weight * (eval_solution(s, x) - exact(x)) ** 2
    l2 = math.sqrt(acc * T / 2.0)
    return l2, linf


@dataclass(frozen=True)
class ConvergenceRecord:
    N: int
    l2_error: float
    linf_error: float
    cond_estimate: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-N error records for one problem, with a fitted decay slope.

    slope is the least-squares slope of log10(L2) versus N over records
    whose L2 sits above the rounding floor; None when fewer than two such
    records exist.  Ns whose solve failed are collected in failures.
    """

    problem_id: str
    records: tuple[ConvergenceRecord, ...]
    slope: Optional[float]
    failures: tuple[tuple[int, str], ...] = ()


_SLOPE_FLOOR = 1e-14


def convergence_study(p: ProblemSpec, Ns: Sequence[int],
                      problem_id: str = "custom") -> ConvergenceReport:
    """Solve p at each N and record error norms and condition estimates.

    Per-N solver failures are recorded and skipped rather than aborting
    the study.
    """
    Ns = [int(N) for N in Ns]
    if not Ns:
        raise ParameterError("convergence_study: need at least one N")
    if len(set(Ns)) != len(Ns):
        raise ParameterError("convergence_study: N values must be distinct")
    if any(N < 1 for N in Ns):
        raise ParameterError("convergence_study: N values must be at least 1")
    if p.exact is None:
        raise ParameterError("convergence_study: problem needs an exact solution")

    records = []
    failures = []
    for N in sorted(Ns):
        try:
            s = solve(p, N)
            l2, linf = error_norms(s, p.exact)
        except FracollocError as exc:
            failures.append((N, str(exc)))
            continue
        records.append(ConvergenceRecord(
            N=N, l2_error=l2, linf_error=linf,
            cond_estimate=s.condition_estimate or 0.0))

    fit = [(r.N, math.log10(r.l2_error)) for r in records if r.l2_error > _SLOPE_FLOOR]
    slope = None
    if len(fit) >= 2:
        xs = np.array([n for n, _ in fit], dtype=float)
        ys = np.array([v for _, v in fit])
        slope = float(np.polyfit(xs, ys, 1)[0])
    return ConvergenceReport(problem_id=problem_id, records=tuple(records),
                             slope=slope, failures=tuple(failures))
