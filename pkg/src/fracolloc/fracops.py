"""Riemann-Liouville fractional integral operators.

Closed forms for generalized polynomials and a brute-force quadrature
oracle for everything else, plus the special functions they depend on
(gamma_fn, erfc).

The operator is

    (I^alpha f)(x) = (1/Gamma(alpha)) * integral_0^x (x-s)^(alpha-1) f(s) ds

with I^0 the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._special import erfc, gamma_fn
from .errors import ConvergenceError, DomainError, ParameterError
from .quadrature import gauss_jacobi

__all__ = [
    "MonomialTerm",
    "gamma_fn",
    "erfc",
    "rl_monomial",
    "rl_poly",
    "rl_numeric",
]


@dataclass(frozen=True)
class MonomialTerm:
    """One term coefficient * x^exponent of a generalized polynomial."""

    coefficient: float
    exponent: float

    def __post_init__(self):
        if not self.exponent > -1.0:
            raise DomainError(
                f"MonomialTerm: exponent must exceed -1, got {self.exponent}")


def rl_monomial(alpha: float, nu: float, x: float) -> float:
    """I^alpha applied to x^nu:  Gamma(nu+1)/Gamma(alpha+nu+1) * x^(alpha+nu).

    alpha = 0 is the identity branch and returns x^nu directly.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"rl_monomial: alpha must lie in [0, 1], got {alpha}")
    if not nu > -1.0:
        raise DomainError(f"rl_monomial: nu must exceed -1, got {nu}")
    if x < 0.0:
        raise DomainError(f"rl_monomial: x must be non-negative, got {x}")
    if alpha == 0.0:
        return _power(x, nu)
    return gamma_fn(nu + 1.0) / gamma_fn(alpha + nu + 1.0) * _power(x, alpha + nu)


def _power(x: float, p: float) -> float:
    if x == 0.0:
        if p > 0.0:
            return 0.0
        if p == 0.0:
            return 1.0
        raise DomainError(f"x^{p} diverges at x = 0")
    return float(x) ** p


def rl_poly(alpha: float, terms, x: float) -> float:
    """I^alpha of a sum of monomial terms, term by term (the operator is
    linear)."""
    total = 0.0
    for term in terms:
        total += term.coefficient * rl_monomial(alpha, term.exponent, x)
    return total


_SIZES = (8, 16, 32, 64, 128, 256, 512)


def rl_numeric(alpha: float, f, x: float, tol: float) -> float:
    """Quadrature evaluation of (I^alpha f)(x), the testing oracle.

    Substituting s = x(theta+1)/2 maps the integral onto Lambda and puts
    the kernel singularity into the Gauss-Jacobi(alpha-1, 0) weight:

        (I^alpha f)(x) = (x/2)^alpha / Gamma(alpha)
                         * sum_j w_j^(alpha-1,0) f(x (theta_j + 1)/2)

    The rule size doubles from 8 until two successive sizes agree within
    tol (relative to max(1, |value|)); the finer value is returned.
    """
    if not 0.0 < alpha <= 1.0:
        raise ParameterError(f"rl_numeric: alpha must lie in (0, 1], got {alpha}")
    if x <= 0.0:
        raise DomainError(f"rl_numeric: x must be positive, got {x}")
    if tol < 1e-12:
        raise ParameterError(f"rl_numeric: tol must be at least 1e-12, got {tol}")
    prefactor = (x / 2.0) ** alpha / gamma_fn(alpha)
    previous = None
    for n in _SIZES:
        rule = gauss_jacobi(n, alpha - 1.0, 0.0)
        acc = 0.0
        for theta, w in zip(rule.nodes, rule.weights):
            acc += w * f(x * (theta + 1.0) / 2.0)
        current = prefactor * acc
        if previous is not None and abs(previous - current) <= tol * max(1.0, abs(current)):
            return float(current)
        previous = current
    raise ConvergenceError(
        f"rl_numeric: no agreement within {tol:g} by {_SIZES[-1]} points "
        f"(last delta {abs(previous - current):.3e})")
