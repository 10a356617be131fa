"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field


class CommandName(str, Enum):
    verify_cone = "verify-cone"
    verify_planar = "verify-planar"
    verify_claims = "verify-claims"
    verify_lattice = "verify-lattice"
    verify_balancing = "verify-balancing"
    counterexample = "counterexample"
    bounds_table = "bounds-table"
    all = "all"


class SuiteRequest(BaseModel):
    """Parameters for one suite run; all randomness derives from the seed."""

    p_list: list[float] | None = Field(default=None, description="measure levels")
    grid: int = Field(default=200, ge=8, le=20000, description="sweep resolution")
    samples: int = Field(default=200, ge=1, le=100000, description="randomized suite size")
    seed: int = Field(default=0, description="seed for all randomized checks")
    tolerances: dict[str, float] = Field(default_factory=dict,
                                         description="named tolerance overrides")


class CheckResult(BaseModel):
    name: str
    kind: Literal["hard", "soft"]
    passed: bool
    detail: dict[str, Any] = Field(default_factory=dict)


class TableResult(BaseModel):
    name: str
    columns: list[str]
    rows: list[list[Any]]


class SuiteReport(BaseModel):
    schema_version: str
    command: str
    seed: int
    passed: bool
    hard_failures: int
    soft_failures: int
    checks: list[CheckResult]
    tables: list[TableResult]


class Health(BaseModel):
    status: str
    version: str
