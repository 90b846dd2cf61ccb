"""HTTP front end: verification, evaluation and factorization as a service.

The endpoints wrap the suite layer one-to-one; the CLI uses the same request
and response models, either in process or against a running server.
"""

from __future__ import annotations

from typing import Any, Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .fixtures import BUILTIN_FIXTURES
from .suite import (
    CHECK_ORDER,
    SuiteConfig,
    parse_budget,
    run_compute,
    run_factorize,
    run_suite,
)


class VerifyRequest(BaseModel):
    fixture: str
    max_dim: int = 3
    budget: str = "auto"
    seed: int = 0
    sample_count: int | None = None
    checks: list[str] | None = None


class CheckReport(BaseModel):
    check: str
    dim: int
    fixture: str
    attempted: int
    passed: int
    seed: int | None
    failures: list[dict]


class VerifyResponse(BaseModel):
    schema_version: int
    fixture: str
    max_dim: int
    budget: dict
    checks: list[CheckReport]
    attempted_total: int
    failures_total: int
    passed: bool
    generated_at: str


class ComputeRequest(BaseModel):
    fixture: str
    map: Literal["D", "S", "H", "wbar_action", "diag_action"]
    input: dict
    operator: str | None = None
    time: int | None = Field(default=None, description="tau index for H, in [0, dim + 1]")


class ComputeResponse(BaseModel):
    map: str
    fixture: str
    kind: Literal["wbar", "diag"]
    result: dict


class FactorizeRequest(BaseModel):
    map: str


class FactorizeResponse(BaseModel):
    map: str
    degeneracy_indices: list[int]
    face_indices: list[int]
    intermediate_dim: int


class FixtureList(BaseModel):
    builtin: list[str]
    checks: list[str]


app = FastAPI(
    title="simpgrp",
    description=(
        "Classifying simplicial sets of finite simplicial groups: computes the "
        "Kan classifying construction and the diagonal of the dimensionwise "
        "nerve, and machine-checks the strong deformation retraction between them."
    ),
    version="0.1.0",
)


def _bad_request(err: ValueError) -> HTTPException:
    return HTTPException(status_code=400, detail=str(err))


def build_suite_config(request: VerifyRequest) -> SuiteConfig:
    budget = parse_budget(request.budget, request.seed, request.sample_count)
    checks = tuple(request.checks) if request.checks else CHECK_ORDER
    return SuiteConfig(
        fixture=request.fixture, max_dim=request.max_dim, budget=budget, checks=checks
    )


@app.get("/health")
def health() -> dict[str, Any]:
    return {"status": "ok", "service": "simpgrp", "schema_version": 1}


@app.get("/fixtures", response_model=FixtureList)
def fixtures() -> FixtureList:
    return FixtureList(builtin=list(BUILTIN_FIXTURES), checks=list(CHECK_ORDER))


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    try:
        config = build_suite_config(request)
        report = run_suite(config)
    except ValueError as err:
        raise _bad_request(err) from None
    return VerifyResponse(**report)


@app.post("/compute", response_model=ComputeResponse)
def compute(request: ComputeRequest) -> ComputeResponse:
    try:
        result = run_compute(
            request.fixture, request.map, request.input, request.operator, request.time
        )
    except ValueError as err:
        raise _bad_request(err) from None
    return ComputeResponse(**result)


@app.post("/factorize", response_model=FactorizeResponse)
def factorize_endpoint(request: FactorizeRequest) -> FactorizeResponse:
    try:
        result = run_factorize(request.map)
    except ValueError as err:
        raise _bad_request(err) from None
    return FactorizeResponse(**result)
