"""Gaussian quadrature rules on Lambda = [-1, 1].

Three families: Gauss-Legendre, Legendre-Gauss-Lobatto, and Gauss-Jacobi
with weight (1-x)^q1 (1+x)^q2.  Jacobi rules come from the Golub-Welsch
method with an in-house implicit-shift QL iteration on the symmetric
tridiagonal recurrence matrix; Lobatto interior nodes come from a
safeguarded Newton search on L_N'.  Generated rules are cached.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import numpy as np

from ._special import gamma_fn
from .errors import ConvergenceError, ParameterError
from .orthopoly import legendre_deriv, legendre_eval_all

__all__ = [
    "QuadratureRule",
    "FAMILY_GAUSS_LEGENDRE",
    "FAMILY_LGL",
    "FAMILY_GAUSS_JACOBI",
    "jacobi_recurrence",
    "gauss_jacobi",
    "gauss_legendre",
    "gauss_lobatto_legendre",
    "integrate",
]

FAMILY_GAUSS_LEGENDRE = "gauss-legendre"
FAMILY_LGL = "gauss-lobatto-legendre"
FAMILY_GAUSS_JACOBI = "gauss-jacobi"

_MOMENT_TOL = 1e-12


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for integration against a fixed weight function.

    The weight function is implicit: integrate() applies the rule to the
    smooth factor only.
    """

    family: str
    nodes: np.ndarray
    weights: np.ndarray
    q1: float | None = None
    q2: float | None = None
    point_count: int = field(init=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float).copy()
        weights = np.asarray(self.weights, dtype=float).copy()
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise ParameterError("QuadratureRule: nodes/weights must be matching 1-d arrays")
        if not (np.all(np.diff(nodes) > 0.0)):
            raise ParameterError("QuadratureRule: nodes must be strictly increasing")
        if nodes[0] < -1.0 - 1e-14 or nodes[-1] > 1.0 + 1e-14:
            raise ParameterError("QuadratureRule: nodes must lie in [-1, 1]")
        if not np.all(weights > 0.0):
            raise ParameterError("QuadratureRule: weights must be positive")
        if self.family == FAMILY_LGL and (nodes[0] != -1.0 or nodes[-1] != 1.0):
            raise ParameterError("QuadratureRule: LGL rules must include both endpoints")
        moment = _zeroth_moment(self.family, self.q1, self.q2)
        if abs(weights.sum() - moment) > _MOMENT_TOL * max(1.0, abs(moment)):
            raise ParameterError(
                f"QuadratureRule: weight sum {weights.sum()!r} does not match "
                f"the zeroth moment {moment!r}")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "point_count", nodes.size)


def _zeroth_moment(family: str, q1: float | None, q2: float | None) -> float:
    if family == FAMILY_GAUSS_JACOBI:
        if q1 is None or q2 is None:
            raise ParameterError("gauss-jacobi rules need q1 and q2")
        return (2.0 ** (q1 + q2 + 1.0) * gamma_fn(q1 + 1.0) * gamma_fn(q2 + 1.0)
                / gamma_fn(q1 + q2 + 2.0))
    return 2.0


def jacobi_recurrence(q1: float, q2: float, k: int) -> tuple[float, float]:
    """Monic three-term recurrence coefficients (alpha_k, beta_k) for the
    Jacobi weight (1-x)^q1 (1+x)^q2; beta_0 carries the zeroth moment."""
    if q1 <= -1.0 or q2 <= -1.0:
        raise ParameterError(f"jacobi_recurrence: parameters must exceed -1, got ({q1}, {q2})")
    if k < 0:
        raise ParameterError("jacobi_recurrence: k must be non-negative")
    a, b = q1, q2
    s = a + b
    if k == 0:
        alpha = (b - a) / (s + 2.0)
        beta = _zeroth_moment(FAMILY_GAUSS_JACOBI, a, b)
    else:
        two = 2.0 * k + s
        alpha = (b * b - a * a) / (two * (two + 2.0))
        if k == 1:
            beta = 4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) ** 2 * (s + 3.0))
        else:
            beta = (4.0 * k * (k + a) * (k + b) * (k + s)
                    / (two * two * (two + 1.0) * (two - 1.0)))
    return alpha, beta


def _tridiag_eigen(diag: np.ndarray, off: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of a symmetric tridiagonal matrix and the first
    components of its orthonormal eigenvectors.

    Implicit-shift QL with the rotation product applied only to the first
    row of the accumulating orthogonal factor, which is all Golub-Welsch
    needs.  Raises ConvergenceError instead of returning silently if an
    eigenvalue fails to deflate.
    """
    n = diag.size
    d = diag.astype(float).copy()
    e = np.zeros(n)
    e[: n - 1] = off
    z = np.zeros(n)
    z[0] = 1.0
    eps = np.finfo(float).eps
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > 50:
                raise ConvergenceError(
                    f"tridiagonal QL failed to deflate index {l} of {n}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            aborted = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                bb = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    aborted = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * bb
                p = s * r
                d[i + 1] = g + p
                g = c * r - bb
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if aborted:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    order = np.argsort(d)
    return d[order], z[order]


def _build_gauss_jacobi(n: int, q1: float, q2: float, family: str) -> QuadratureRule:
    diag = np.empty(n)
    off = np.empty(max(n - 1, 0))
    for k in range(n):
        alpha, beta = jacobi_recurrence(q1, q2, k)
        diag[k] = alpha
        if k >= 1:
            off[k - 1] = math.sqrt(beta)
    beta0 = jacobi_recurrence(q1, q2, 0)[1]
    nodes, first = _tridiag_eigen(diag, off)
    weights = beta0 * first**2
    if family == FAMILY_GAUSS_JACOBI:
        return QuadratureRule(family, nodes, weights, q1=q1, q2=q2)
    return QuadratureRule(family, nodes, weights)


_cache: dict[tuple, QuadratureRule] = {}
_cache_lock = threading.Lock()


def _cache_key(family: str, n: int, q1: float, q2: float) -> tuple:
    # Weight parameters keyed at 1e-14 granularity.
    return family, n, round(q1 * 1e14), round(q2 * 1e14)


def _cached(key: tuple, build) -> QuadratureRule:
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    rule = build()
    with _cache_lock:
        return _cache.setdefault(key, rule)


def gauss_jacobi(n: int, q1: float, q2: float) -> QuadratureRule:
    """n-point Gauss rule for the weight (1-x)^q1 (1+x)^q2, exact through
    degree 2n-1."""
    if n < 1:
        raise ParameterError("gauss_jacobi: n must be positive")
    if q1 <= -1.0 or q2 <= -1.0:
        raise ParameterError(f"gauss_jacobi: parameters must exceed -1, got ({q1}, {q2})")
    key = _cache_key(FAMILY_GAUSS_JACOBI, n, q1, q2)
    return _cached(key, lambda: _build_gauss_jacobi(n, q1, q2, FAMILY_GAUSS_JACOBI))


def gauss_legendre(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule (the q1 = q2 = 0 Jacobi case)."""
    if n < 1:
        raise ParameterError("gauss_legendre: n must be positive")
    key = _cache_key(FAMILY_GAUSS_LEGENDRE, n, 0.0, 0.0)
    return _cached(key, lambda: _build_gauss_jacobi(n, 0.0, 0.0, FAMILY_GAUSS_LEGENDRE))


def _lobatto_interior(N: int) -> np.ndarray:
    """Roots of L_N' by safeguarded Newton from Chebyshev-extrema guesses."""
    roots = np.empty(N - 1)
    for j in range(1, N):
        # Extrema of L_N sit close to the Chebyshev extrema; successive
        # guesses bracket exactly one root of L_N'.
        x = math.cos(math.pi * j / N)
        lo = math.cos(math.pi * (j + 0.5) / N)
        hi = math.cos(math.pi * (j - 0.5) / N)
        # L_N' carries a fixed sign on each side of the single root in
        # [lo, hi].  Remember the left side's sign once: comparing each
        # iterate against a reevaluated endpoint would turn into noise as
        # soon as an endpoint lands on the root itself.
        left_sign = math.copysign(1.0, legendre_deriv(N, lo))
        converged = False
        for _ in range(100):
            dp = legendre_deriv(N, x)
            if dp == 0.0:
                converged = True
                break
            LN = legendre_eval_all(N, x)[N]
            # (1 - x^2) L_N'' = 2x L_N' - N(N+1) L_N
            ddp = (2.0 * x * dp - N * (N + 1.0) * LN) / (1.0 - x * x)
            step = dp / ddp
            xn = x - step
            if not (lo < xn < hi):
                xn = 0.5 * (lo + hi)  # bisection fallback keeps the bracket
            if legendre_deriv(N, xn) * left_sign > 0.0:
                lo = xn
            else:
                hi = xn
            done = abs(xn - x) <= 1e-14
            x = xn
            if done:
                converged = True
                break
        if not converged:
            raise ConvergenceError(
                f"Lobatto node search did not converge for root {j} of L_{N}'")
        # The bracketed loop stops once steps shrink below 1e-14, which can
        # leave the root with a few ulps of slack; large-N transforms
        # amplify that by O(N^2).  Two plain Newton polish steps converge
        # quadratically from here and remove the slack.
        for _ in range(2):
            dp = legendre_deriv(N, x)
            if dp == 0.0:
                break
            LN = legendre_eval_all(N, x)[N]
            ddp = (2.0 * x * dp - N * (N + 1.0) * LN) / (1.0 - x * x)
            x -= dp / ddp
        roots[N - 1 - j] = x  # cos is decreasing in j; store ascending
    return roots


def _build_lobatto(N: int) -> QuadratureRule:
    nodes = np.empty(N + 1)
    nodes[0] = -1.0
    nodes[N] = 1.0
    if N >= 2:
        nodes[1:N] = _lobatto_interior(N)
    weights = np.empty(N + 1)
    for j, xj in enumerate(nodes):
        LN = legendre_eval_all(N, xj)[N]
        weights[j] = 2.0 / (N * (N + 1.0) * LN * LN)
    return QuadratureRule(FAMILY_LGL, nodes, weights)


def gauss_lobatto_legendre(N: int) -> QuadratureRule:
    """(N+1)-point Legendre-Gauss-Lobatto rule: endpoints plus the roots
    of L_N', weights 2 / (N (N+1) L_N(x_j)^2); exact through degree 2N-1."""
    if N < 1:
        raise ParameterError("gauss_lobatto_legendre: N must be at least 1")
    key = _cache_key(FAMILY_LGL, N, 0.0, 0.0)
    return _cached(key, lambda: _build_lobatto(N))


def integrate(rule: QuadratureRule, g) -> float:
    """Apply the rule: sum of g(node_j) * weight_j.

    g is the smooth factor only; the family's weight function is built
    into the rule's weights.
    """
    values = np.fromiter((g(x) for x in rule.nodes), dtype=float, count=rule.point_count)
    return float(np.dot(values, rule.weights))
