"""HTTP service wrapping the solver library.

Endpoints mirror the command-line subcommands: /solve and /table for
pointwise solutions, /convergence for error-decay studies, /quad for
quadrature rule dumps.  Usage faults map to 400, numerical failures
(singular system, oracle non-convergence) to 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..cli import _UsageError, _parse_points
from ..errors import (ExpressionSyntaxError, FracollocError, ParameterError,
                      UnknownIdentifierError)
from ..problems import builtin, convergence_study, problem_from_expressions
from ..quadrature import gauss_jacobi, gauss_legendre, gauss_lobatto_legendre
from ..solver import eval_solution, solve
from .schemas import (ConvergenceRequest, ConvergenceResponse, ConvergenceRow,
                      HealthResponse, PointRow, ProblemPayload, QuadRequest,
                      QuadResponse, QuadRow, SolveRequest, SolveResponse)

_USAGE = (ParameterError, ExpressionSyntaxError, UnknownIdentifierError, _UsageError)


def _problem(payload: ProblemPayload):
    if payload.example is not None:
        return builtin(payload.example), f"example {payload.example}"
    spec = problem_from_expressions(payload.alpha, payload.T, payload.a,
                                    payload.b, payload.f, payload.exact)
    return spec, "custom"


def _solve_impl(request: SolveRequest) -> SolveResponse:
    try:
        spec, source = _problem(request.problem)
        points = _parse_points(request.points, spec.T)
        solution = solve(spec, request.N)
        rows = []
        for x in points:
            approx = eval_solution(solution, x)
            if spec.exact is not None:
                exact = spec.exact(x)
                rows.append(PointRow(t=x, approx=approx, exact=exact,
                                     abs_error=abs(approx - exact)))
            else:
                rows.append(PointRow(t=x, approx=approx))
    except _USAGE as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except (FracollocError, ArithmeticError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return SolveResponse(problem=source, alpha=spec.alpha, T=spec.T, N=request.N,
                         condition_estimate=solution.condition_estimate, rows=rows)


def create_app() -> FastAPI:
    app = FastAPI(title="fracolloc", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/solve", response_model=SolveResponse)
    def solve_endpoint(request: SolveRequest) -> SolveResponse:
        return _solve_impl(request)

    @app.post("/table", response_model=SolveResponse)
    def table_endpoint(request: SolveRequest) -> SolveResponse:
        return _solve_impl(request)

    @app.post("/convergence", response_model=ConvergenceResponse)
    def convergence_endpoint(request: ConvergenceRequest) -> ConvergenceResponse:
        try:
            spec, source = _problem(request.problem)
            if spec.exact is None:
                raise ParameterError("convergence needs an exact solution")
            Ns = list(range(request.n_min, request.n_max + 1, request.n_step))
            report = convergence_study(spec, Ns, problem_id=source)
        except _USAGE as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except (FracollocError, ArithmeticError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        rows = [ConvergenceRow(N=r.N, l2_error=r.l2_error, linf_error=r.linf_error,
                               cond_estimate=r.cond_estimate)
                for r in report.records]
        return ConvergenceResponse(problem=source, alpha=spec.alpha, T=spec.T,
                                   slope=report.slope, rows=rows,
                                   failures=list(report.failures))

    @app.post("/quad", response_model=QuadResponse)
    def quad_endpoint(request: QuadRequest) -> QuadResponse:
        try:
            if request.family == "jacobi":
                if request.q1 is None or request.q2 is None:
                    raise ParameterError("family jacobi needs q1 and q2")
                rule = gauss_jacobi(request.N, request.q1, request.q2)
            elif request.family == "legendre":
                rule = gauss_legendre(request.N)
            else:
                rule = gauss_lobatto_legendre(request.N)
        except _USAGE as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except (FracollocError, ArithmeticError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        rows = [QuadRow(index=j, node=x, weight=w)
                for j, (x, w) in enumerate(zip(rule.nodes, rule.weights))]
        return QuadResponse(family=request.family, N=request.N,
                            q1=request.q1, q2=request.q2, rows=rows)

    return app


app = create_app()
