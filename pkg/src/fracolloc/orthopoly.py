"""Legendre and Jacobi polynomials over Lambda = [-1, 1].

Evaluation by three-term recurrences, closed-form weighted norms, and the
discrete transform between nodal values at Gauss-Lobatto points and modal
Legendre coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._special import gamma_fn
from .errors import DomainError, ParameterError

__all__ = [
    "LegendreSeries",
    "legendre_eval_all",
    "legendre_deriv",
    "jacobi_eval",
    "jacobi_norm",
    "nodal_to_modal",
    "series_eval",
]

# Evaluation tolerance just outside the closed interval, to absorb the
# round-off of upstream affine maps without hiding genuine mapping bugs.
_EDGE = 1.0 + 1e-12

_LGL_FAMILY = "gauss-lobatto-legendre"


def _check_in_lambda(x: float, who: str) -> float:
    x = float(x)
    if abs(x) > _EDGE:
        raise DomainError(f"{who}: x={x!r} lies outside [-1, 1]")
    return x


@dataclass(frozen=True)
class LegendreSeries:
    """A polynomial sum(u_i * L_i, i = 0..N) in modal coordinates."""

    coefficients: np.ndarray
    degree: int = field(init=False)

    def __post_init__(self):
        coef = np.asarray(self.coefficients, dtype=float)
        if coef.ndim != 1 or coef.size == 0:
            raise ParameterError("LegendreSeries needs a non-empty 1-d coefficient array")
        if not np.all(np.isfinite(coef)):
            raise ParameterError("LegendreSeries coefficients must be finite")
        coef = coef.copy()
        coef.setflags(write=False)
        object.__setattr__(self, "coefficients", coef)
        object.__setattr__(self, "degree", coef.size - 1)


def legendre_eval_all(N: int, x: float) -> np.ndarray:
    """Values [L_0(x), ..., L_N(x)] by the three-term recurrence.

    L_{i+1}(x) = ((2i+1)/(i+1)) x L_i(x) - (i/(i+1)) L_{i-1}(x)
    """
    if N < 0:
        raise ParameterError("legendre_eval_all: N must be non-negative")
    x = _check_in_lambda(x, "legendre_eval_all")
    out = np.empty(N + 1)
    out[0] = 1.0
    if N >= 1:
        out[1] = x
    for i in range(1, N):
        out[i + 1] = ((2 * i + 1) * x * out[i] - i * out[i - 1]) / (i + 1)
    return out


def legendre_deriv(n: int, x: float) -> float:
    """L_n'(x) via the derivative recurrence L'_{i+1} = (2i+1) L_i + L'_{i-1}."""
    if n < 0:
        raise ParameterError("legendre_deriv: n must be non-negative")
    x = _check_in_lambda(x, "legendre_deriv")
    if n == 0:
        return 0.0
    L = legendre_eval_all(n - 1, x)
    dprev, dcur = 0.0, 1.0  # L'_0, L'_1
    for i in range(1, n):
        dprev, dcur = dcur, (2 * i + 1) * L[i] + dprev
    return dcur


def jacobi_eval(q1: float, q2: float, n: int, x: float) -> float:
    """J_n^{q1,q2}(x) by the Jacobi three-term recurrence.

    J_0 = 1 and J_1 = (1/2)(q1+q2+2) x + (1/2)(q1-q2) are taken in closed
    form; starting the generic recurrence at degree one would divide by
    zero on the family boundary q1 + q2 = -1.
    """
    _check_params(q1, q2)
    if n < 0:
        raise ParameterError("jacobi_eval: n must be non-negative")
    x = _check_in_lambda(x, "jacobi_eval")
    if n == 0:
        return 1.0
    a, b = q1, q2
    jprev = 1.0
    jcur = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b)
    for k in range(1, n):
        c = 2.0 * k + a + b
        a1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * c
        a2 = (c + 1.0) * (a * a - b * b)
        a3 = (c + 1.0) * c * (c + 2.0)
        a4 = 2.0 * (k + a) * (k + b) * (c + 2.0)
        jprev, jcur = jcur, ((a2 + a3 * x) * jcur - a4 * jprev) / a1
    return jcur


def jacobi_norm(q1: float, q2: float, n: int) -> float:
    """Weighted L2 norm gamma_n of J_n^{q1,q2} over Lambda."""
    _check_params(q1, q2)
    if n < 0:
        raise ParameterError("jacobi_norm: n must be non-negative")
    a, b = q1, q2
    if n == 0:
        return 2.0 ** (a + b + 1.0) * gamma_fn(a + 1.0) * gamma_fn(b + 1.0) / gamma_fn(a + b + 2.0)
    num = 2.0 ** (a + b + 1.0) * gamma_fn(n + a + 1.0) * gamma_fn(n + b + 1.0)
    den = (2.0 * n + a + b + 1.0) * gamma_fn(n + 1.0) * gamma_fn(n + a + b + 1.0)
    return num / den


def _check_params(q1: float, q2: float) -> None:
    if q1 <= -1.0 or q2 <= -1.0:
        raise ParameterError(f"Jacobi parameters must exceed -1, got q1={q1}, q2={q2}")


def discrete_norms(N: int) -> np.ndarray:
    """LGL discrete inner products (L_i, L_i)_N for i = 0..N.

    Equal to the exact norms 2/(2i+1) except at the top mode, where the
    (N+1)-point rule aliases and the value is 2/N.
    """
    if N < 1:
        raise ParameterError("discrete_norms: N must be at least 1")
    h = 2.0 / (2.0 * np.arange(N + 1) + 1.0)
    h[N] = 2.0 / N
    return h


def nodal_to_modal(values, rule) -> LegendreSeries:
    """Legendre coefficients of the interpolant through LGL nodal values.

    u_i = (1/h~_i) sum_j values_j L_i(x_j) w_j with the discrete norms
    h~_i; with those norms the returned series interpolates the inputs
    exactly at the rule's nodes.
    """
    family = getattr(rule, "family", None)
    if family != _LGL_FAMILY:
        raise ParameterError(f"nodal_to_modal requires an LGL rule, got family {family!r}")
    values = np.asarray(values, dtype=float)
    nodes = np.asarray(rule.nodes)
    weights = np.asarray(rule.weights)
    if values.shape != nodes.shape:
        raise ParameterError(
            f"nodal_to_modal: {values.size} values for a {nodes.size}-node rule")
    N = nodes.size - 1
    table = np.empty((N + 1, N + 1))
    for j, xj in enumerate(nodes):
        table[:, j] = legendre_eval_all(N, xj)
    coef = table @ (values * weights) / discrete_norms(N)
    return LegendreSeries(coef)


def series_eval(series: LegendreSeries, x: float) -> float:
    """Evaluate sum(u_i L_i(x)) at a point of Lambda."""
    L = legendre_eval_all(series.degree, x)
    return float(np.dot(series.coefficients, L))
