"""Spectral-collocation solver for second-kind fractional integral equations

    y(x) = a(x) * I^alpha{ b(.) y(.) }(x) + f(x),   x in [0, T],

with 0 < alpha < 1.  The problem is mapped onto Lambda = [-1, 1], the
unknown is expanded in Legendre polynomials of degree N, and the equation
is enforced at the Legendre-Gauss-Lobatto nodes.  The inner integral over
[-1, t] is pulled back to Lambda by

    mu(t, theta) = ((t + 1)/2) theta + (t - 1)/2

and integrated by a Gauss-Jacobi(alpha-1, 0) rule that absorbs the kernel
singularity.  Matching modal coefficients yields the dense linear system
(I - K) u = f_hat, which is solved by LU factorization with partial
pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._special import gamma_fn
from .errors import DomainError, ParameterError, SingularMatrixError
from .fracops import rl_numeric
from .orthopoly import (LegendreSeries, discrete_norms, legendre_eval_all,
                        nodal_to_modal, series_eval)
from .quadrature import gauss_jacobi, gauss_lobatto_legendre

__all__ = [
    "ProblemSpec",
    "MappedProblem",
    "CollocationSystem",
    "SpectralSolution",
    "mu",
    "map_problem",
    "assemble",
    "solve_linear",
    "solve",
    "eval_solution",
    "residual",
]

Field = Callable[[float], float]


@dataclass(frozen=True)
class ProblemSpec:
    """The equation data: alpha, T, coefficient fields a and b, forcing f,
    and optionally the exact solution for error studies."""

    alpha: float
    T: float
    a: Field
    b: Field
    f: Field
    exact: Optional[Field] = None

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ParameterError(
                f"ProblemSpec: alpha must lie strictly in (0, 1), got {self.alpha}")
        if not self.T > 0.0:
            raise ParameterError(f"ProblemSpec: T must be positive, got {self.T}")


@dataclass(frozen=True)
class MappedProblem:
    """The problem transported to Lambda by x = T (t + 1) / 2."""

    alpha: float
    T: float
    A: Field
    B: Field
    F: Field

    @staticmethod
    def mu(t: float, theta: float):
        return mu(t, theta)


def mu(t, theta):
    """The affine pullback of [-1, t] onto Lambda; mu(t, 1) = t and
    mu(t, -1) = -1 for every t."""
    return (t + 1.0) / 2.0 * theta + (t - 1.0) / 2.0


def map_problem(p: ProblemSpec) -> MappedProblem:
    """Change variables t = 2x/T - 1, giving fields A, B, F on Lambda."""
    half_T = p.T / 2.0

    def compose(g: Field) -> Field:
        return lambda t: g(half_T * (t + 1.0))

    return MappedProblem(alpha=p.alpha, T=p.T,
                         A=compose(p.a), B=compose(p.b), F=compose(p.f))


@dataclass
class CollocationSystem:
    """The dense modal system (I - K) u = f_hat.  Single use: solve_linear
    populates condition_estimate and the object is not shared further."""

    N: int
    matrix: np.ndarray
    rhs: np.ndarray
    condition_estimate: float | None = field(default=None)


def _eval_field(g: Field, points: np.ndarray, name: str) -> np.ndarray:
    values = np.fromiter((g(t) for t in points), dtype=float, count=points.size)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"assemble: field {name} evaluated non-finite")
    return values


def assemble(mp: MappedProblem, N: int) -> CollocationSystem:
    """Build the collocation system at polynomial degree N.

    The operator block is

      K[i][m] = c_i * sum_{l1} sum_{l2} (x_{l1}+1)^alpha A(x_{l1})
                B(mu(x_{l1}, theta_{l2})) L_m(mu(x_{l1}, theta_{l2}))
                L_i(x_{l1}) w_{l1} w_{l2}^(alpha-1,0)

    with c_i = T^alpha * alpha / (2^(2 alpha) Gamma(alpha+1) h~_i), the
    (N+1)-point LGL rule in l1, and the (N+1)-point Gauss-Jacobi(alpha-1, 0)
    rule in l2.  The right-hand side is the discrete Legendre transform of
    the forcing at the LGL nodes.
    """
    if N < 1:
        raise ParameterError(f"assemble: N must be at least 1, got {N}")
    alpha = mp.alpha
    lgl = gauss_lobatto_legendre(N)
    gj = gauss_jacobi(N + 1, alpha - 1.0, 0.0)
    x, w = lgl.nodes, lgl.weights
    theta, wj = gj.nodes, gj.weights

    # P[i, l] = L_i(x_l); columns are per-node Legendre stacks.
    P = np.column_stack([legendre_eval_all(N, xl) for xl in x])

    A = _eval_field(mp.A, x, "A")
    F = _eval_field(mp.F, x, "F")
    # (x_l + 1)^alpha: a real power of a non-negative base; the node at -1
    # contributes an exact zero.
    q = (x + 1.0) ** alpha * A * w

    # S[l1, m] = sum_{l2} w_{l2} B(mu) L_m(mu) at fixed outer node l1.
    S = np.empty((N + 1, N + 1))
    for l1 in range(N + 1):
        mus = mu(x[l1], theta)
        Bmu = _eval_field(mp.B, mus, "B")
        Lmu = np.column_stack([legendre_eval_all(N, m) for m in mus])
        S[l1, :] = Lmu @ (wj * Bmu)

    htilde = discrete_norms(N)
    c = mp.T**alpha * alpha / (2.0 ** (2.0 * alpha) * gamma_fn(alpha + 1.0) * htilde)
    K = c[:, None] * ((P * q[None, :]) @ S)

    f_hat = nodal_to_modal(F, lgl).coefficients.copy()
    return CollocationSystem(N=N, matrix=np.eye(N + 1) - K, rhs=f_hat)


# ---------------------------------------------------------------------------
# Dense LU with partial pivoting and a 1-norm condition estimate.

_PIVOT_FLOOR = 1e-14


def _lu_factor(M: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    n = M.shape[0]
    lu = M.astype(float).copy()
    piv = np.arange(n)
    norm_inf = float(np.abs(M).sum(axis=1).max())
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) < _PIVOT_FLOOR * norm_inf:
            raise SingularMatrixError(
                f"pivot {abs(lu[p, k]):.3e} below {_PIVOT_FLOOR:g} * ||M||_inf "
                f"at elimination step {k}")
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            piv[[k, p]] = piv[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, piv, norm_inf


def _lu_solve(lu: np.ndarray, piv: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = lu.shape[0]
    y = b[piv].astype(float)
    for k in range(1, n):
        y[k] -= lu[k, :k] @ y[:k]
    for k in range(n - 1, -1, -1):
        y[k] = (y[k] - lu[k, k + 1:] @ y[k + 1:]) / lu[k, k]
    return y


def _lu_solve_transpose(lu: np.ndarray, piv: np.ndarray, b: np.ndarray) -> np.ndarray:
    # M = P^T L U, so M^T z = b means U^T v = b, L^T w = v, z = P^T w.
    n = lu.shape[0]
    v = b.astype(float).copy()
    for k in range(n):
        v[k] = (v[k] - lu[:k, k] @ v[:k]) / lu[k, k]
    for k in range(n - 1, -1, -1):
        v[k] -= lu[k + 1:, k] @ v[k + 1:]
    z = np.empty_like(v)
    z[piv] = v
    return z


def _condition_estimate(M: np.ndarray, lu: np.ndarray, piv: np.ndarray) -> float:
    """Hager-style 1-norm estimate of cond_1(M) from the factored matrix."""
    n = M.shape[0]
    norm1 = float(np.abs(M).sum(axis=0).max())
    xvec = np.full(n, 1.0 / n)
    estimate = 0.0
    for _ in range(5):
        y = _lu_solve(lu, piv, xvec)
        estimate = float(np.abs(y).sum())
        xi = np.where(y >= 0.0, 1.0, -1.0)
        z = _lu_solve_transpose(lu, piv, xi)
        j = int(np.argmax(np.abs(z)))
        if np.abs(z).max() <= float(z @ xvec) + 1e-15:
            break
        xvec = np.zeros(n)
        xvec[j] = 1.0
    return norm1 * estimate


def solve_linear(sys: CollocationSystem) -> LegendreSeries:
    """Solve (I - K) u = f_hat by LU with row pivoting.

    Records a 1-norm condition estimate on the system; raises
    SingularMatrixError if a pivot collapses (the scheme degenerated for
    this alpha/N/problem combination).
    """
    lu, piv, _ = _lu_factor(sys.matrix)
    u = _lu_solve(lu, piv, sys.rhs)
    sys.condition_estimate = _condition_estimate(sys.matrix, lu, piv)
    return LegendreSeries(u)


@dataclass(frozen=True)
class SpectralSolution:
    """A solved problem: the modal series over Lambda plus the data needed
    to map back to [0, T]."""

    series: LegendreSeries
    alpha: float
    T: float
    N: int
    condition_estimate: float | None = None


def solve(p: ProblemSpec, N: int) -> SpectralSolution:
    """map_problem -> assemble -> solve_linear, packaged as a solution."""
    mp = map_problem(p)
    system = assemble(mp, N)
    series = solve_linear(system)
    return SpectralSolution(series=series, alpha=p.alpha, T=p.T, N=N,
                            condition_estimate=system.condition_estimate)


def eval_solution(s: SpectralSolution, x: float) -> float:
    """Value of the computed solution at x in [0, T] (series evaluation at
    t = 2x/T - 1)."""
    x = float(x)
    if x < -1e-12 * s.T or x > s.T * (1.0 + 1e-12):
        raise DomainError(f"eval_solution: x={x!r} outside [0, {s.T}]")
    t = min(1.0, max(-1.0, 2.0 * x / s.T - 1.0))
    return series_eval(s.series, t)


def residual(s: SpectralSolution, p: ProblemSpec, grid, tol: float) -> float:
    """Max absolute defect of the computed solution in the original
    equation over the grid, with the fractional integral evaluated by the
    rl_numeric oracle."""
    points = [float(x) for x in grid]
    if not points:
        raise ParameterError("residual: grid must be non-empty")

    def integrand(x: float) -> float:
        return p.b(x) * eval_solution(s, x)

    worst = 0.0
    for x in points:
        if not 0.0 < x <= p.T:
            raise DomainError(f"residual: grid point {x!r} outside (0, T]")
        defect = eval_solution(s, x) - p.a(x) * rl_numeric(p.alpha, integrand, x, tol) - p.f(x)
        worst = max(worst, abs(float(defect)))
    return worst
