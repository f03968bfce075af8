"""Pydantic request/response models for the verification service.

Coefficients and q values travel as strings ("2", "1/2", "phase:1/7") so the
wire format never rounds an exact rational.
"""
from __future__ import annotations

from pydantic import BaseModel, Field

from .. import SCHEMA_VERSION


class SuiteRequest(BaseModel):
    suite: str = "all"
    n: int = Field(default=3, ge=2)
    coeffs: list[str] | None = None
    coeffs2: list[str] | None = None
    k: int = 1
    two_j: int = Field(default=10, ge=0)
    q: list[str] | None = None
    seed: int = 0
    backend: str = "exact"


class GensRequest(BaseModel):
    n: int = Field(ge=2)
    m: int = 4


class CellRequest(BaseModel):
    """One (n, coefficients) verification cell."""

    n: int = Field(ge=2)
    coeffs: list[str] | None = None
    k: int = 1


class InvestigateRequest(BaseModel):
    n: int | None = None


class Su2Request(BaseModel):
    two_j: int = Field(ge=0)
    q: str = "2"


class WeylRequest(BaseModel):
    n: int = Field(ge=2)


class ExprRequest(BaseModel):
    text: str
    n: int = Field(default=3, ge=2)
    coeffs: list[str] | None = None
    coeffs2: list[str] | None = None
    k: int = 1
    backend: str = "exact"


class Report(BaseModel):
    """Uniform response envelope: ok drives the client's exit code."""

    schema_version: int = SCHEMA_VERSION
    kind: str
    ok: bool
    payload: dict


class Health(BaseModel):
    status: str = "ok"
    schema_version: int = SCHEMA_VERSION
    version: str
