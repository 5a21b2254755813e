"""fracolloc: Legendre spectral collocation for second-kind fractional
integral equations y(x) = a(x) I^alpha{b y}(x) + f(x) on [0, T]."""

from .errors import (ConvergenceError, DomainError, EvaluationError,
                     ExpressionSyntaxError, FracollocError, ParameterError,
                     PoleError, SingularMatrixError, UnknownIdentifierError)
from .fracops import MonomialTerm, erfc, gamma_fn, rl_monomial, rl_numeric, rl_poly
from .orthopoly import (LegendreSeries, jacobi_eval, jacobi_norm,
                        legendre_deriv, legendre_eval_all, nodal_to_modal,
                        series_eval)
from .problems import (ConvergenceReport, builtin, convergence_study,
                       error_norms, format_expr, parse_expr,
                       problem_from_expressions)
from .quadrature import (QuadratureRule, gauss_jacobi, gauss_legendre,
                         gauss_lobatto_legendre, integrate, jacobi_recurrence)
from .solver import (CollocationSystem, MappedProblem, ProblemSpec,
                     SpectralSolution, assemble, eval_solution, map_problem,
                     mu, residual, solve, solve_linear)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DomainError", "EvaluationError",
    "ExpressionSyntaxError", "FracollocError", "ParameterError", "PoleError",
    "SingularMatrixError", "UnknownIdentifierError",
    "MonomialTerm", "erfc", "gamma_fn", "rl_monomial", "rl_numeric", "rl_poly",
    "LegendreSeries", "jacobi_eval", "jacobi_norm", "legendre_deriv",
    "legendre_eval_all", "nodal_to_modal", "series_eval",
    "ConvergenceReport", "builtin", "convergence_study", "error_norms",
    "format_expr", "parse_expr", "problem_from_expressions",
    "QuadratureRule", "gauss_jacobi", "gauss_legendre",
    "gauss_lobatto_legendre", "integrate", "jacobi_recurrence",
    "CollocationSystem", "MappedProblem", "ProblemSpec", "SpectralSolution",
    "assemble", "eval_solution", "map_problem", "mu", "residual", "solve",
    "solve_linear",
    "__version__",
]
