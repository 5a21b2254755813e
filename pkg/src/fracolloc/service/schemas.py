"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, model_validator


class ProblemPayload(BaseModel):
    """Either a builtin example id, or the full expression quadruple."""

    example: Optional[int] = Field(default=None, ge=1, le=3)
    alpha: Optional[float] = None
    T: Optional[float] = None
    a: Optional[str] = None
    b: Optional[str] = None
    f: Optional[str] = None
    exact: Optional[str] = None

    @model_validator(mode="after")
    def _check_exclusive(self):
        custom = (self.alpha, self.T, self.a, self.b, self.f)
        if self.example is not None:
            if any(v is not None for v in custom) or self.exact is not None:
                raise ValueError("example excludes the custom problem fields")
        elif any(v is None for v in custom):
            raise ValueError("need example or all of alpha, T, a, b, f")
        return self


class SolveRequest(BaseModel):
    problem: ProblemPayload
    N: int = Field(ge=1, le=200)
    points: Optional[str] = Field(default=None, description="grid as lo:hi:step")


class PointRow(BaseModel):
    t: float
    approx: float
    exact: Optional[float] = None
    abs_error: Optional[float] = None


class SolveResponse(BaseModel):
    problem: str
    alpha: float
    T: float
    N: int
    condition_estimate: Optional[float] = None
    rows: list[PointRow]


class ConvergenceRequest(BaseModel):
    problem: ProblemPayload
    n_min: int = Field(ge=1)
    n_max: int = Field(ge=1)
    n_step: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_range(self):
        if self.n_max < self.n_min:
            raise ValueError("n_max must be at least n_min")
        return self


class ConvergenceRow(BaseModel):
    N: int
    l2_error: float
    linf_error: float
    cond_estimate: float


class ConvergenceResponse(BaseModel):
    problem: str
    alpha: float
    T: float
    slope: Optional[float]
    rows: list[ConvergenceRow]
    failures: list[tuple[int, str]] = []


class QuadRequest(BaseModel):
    family: str = Field(pattern="^(legendre|lgl|jacobi)$")
    N: int = Field(ge=1, le=512)
    q1: Optional[float] = None
    q2: Optional[float] = None


class QuadRow(BaseModel):
    index: int
    node: float
    weight: float


class QuadResponse(BaseModel):
    family: str
    N: int
    q1: Optional[float] = None
    q2: Optional[float] = None
    rows: list[QuadRow]


class HealthResponse(BaseModel):
    status: str
    version: str
