"""FastAPI service exposing the verification engine.

Every endpoint is a pure function of its request body, so responses are
deterministic and cacheable; the CLI is a thin client of this app.
"""
from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..exprlang import (
    EvalError,
    ExprSyntaxError,
    eval_expr,
    make_evaluator,
    parse_expr,
    pretty,
    uses_primes,
)
from ..cliffalg import clifford_generators
from ..qgroup import (
    build_A,
    matrix_power,
    plane_action,
    qdet,
    symplectic_check,
    verify_quantization,
)
from ..qsu2 import polar_report
from ..suites import parse_q_spec, run_suite, suite_investigate
from ..weylqm import verify_weyl_pair
from .schemas import (
    CellRequest,
    ExprRequest,
    GensRequest,
    Health,
    InvestigateRequest,
    Report,
    SuiteRequest,
    Su2Request,
    WeylRequest,
)

app = FastAPI(
    title="qcliff",
    description="Exact verification of clock/shift operator algebras and GL_w(2)",
    version=__version__,
)

DEFAULT_COEFFS = ("1", "2", "3", "6")


def _coeffs(values: list[str] | None) -> tuple[Fraction, ...]:
    raw = tuple(values) if values else DEFAULT_COEFFS
    if len(raw) != 4:
        raise HTTPException(status_code=422, detail="need exactly four coefficients")
    try:
        return tuple(Fraction(v) for v in raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=422, detail=f"bad coefficient: {exc}")


@app.get("/api/health", response_model=Health)
def health() -> Health:
    return Health(version=__version__)


@app.post("/api/suite", response_model=Report)
def suite(req: SuiteRequest) -> Report:
    try:
        report = run_suite(req.model_dump())
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return Report(kind="suite", ok=report["ok"], payload=report)


@app.post("/api/gens", response_model=Report)
def gens(req: GensRequest) -> Report:
    try:
        system = clifford_generators(req.n, req.m)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    payload = {
        "n": req.n,
        "m": req.m,
        "orientation": "clock*shift = w^+1 * shift*clock; pairwise exponent +1 for i<j",
        "generators": [g.to_json() for g in system.generators],
    }
    return Report(kind="gens", ok=True, payload=payload)


@app.post("/api/qdet", response_model=Report)
def qdet_endpoint(req: CellRequest) -> Report:
    A = build_A(req.n, *_coeffs(req.coeffs))
    result = qdet(A)
    ok = result.forms_agree and result.central
    return Report(kind="qdet", ok=ok, payload=result.to_json())


@app.post("/api/power", response_model=Report)
def power(req: CellRequest) -> Report:
    if req.k < 1:
        raise HTTPException(status_code=422, detail="power must be at least 1")
    A = matrix_power(build_A(req.n, *_coeffs(req.coeffs)), req.k)
    report = verify_quantization(A)
    return Report(kind="power", ok=report.all_hold(), payload=report.to_json())


@app.post("/api/plane", response_model=Report)
def plane(req: CellRequest) -> Report:
    report = plane_action(build_A(req.n, *_coeffs(req.coeffs)))
    return Report(kind="plane", ok=report.holds(), payload=report.to_json())


@app.post("/api/symplectic", response_model=Report)
def symplectic(req: CellRequest) -> Report:
    report = symplectic_check(build_A(req.n, *_coeffs(req.coeffs)))
    return Report(kind="symplectic", ok=report.holds(), payload=report.to_json())


@app.post("/api/investigate", response_model=Report)
def investigate(req: InvestigateRequest) -> Report:
    assertions, findings = suite_investigate(req.n)
    payload = {"assertions": assertions, "findings": findings}
    return Report(
        kind="investigate",
        ok=all(a["ok"] for a in assertions),
        payload=payload,
    )


@app.post("/api/su2", response_model=Report)
def su2(req: Su2Request) -> Report:
    try:
        q = parse_q_spec(req.q)
        cell = polar_report(req.two_j, q)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    ok = cell["degenerate"] or cell["max_residual"] < 1e-10
    return Report(kind="su2", ok=ok, payload=cell)


@app.post("/api/weyl", response_model=Report)
def weyl(req: WeylRequest) -> Report:
    report = verify_weyl_pair(req.n)
    return Report(
        kind="weyl",
        ok=report["exact_ok"] and report["float_ok"],
        payload=report,
    )


@app.post("/api/expr", response_model=Report)
def expr(req: ExprRequest) -> Report:
    try:
        ast = parse_expr(req.text)
        evaluator = make_evaluator(
            req.backend,
            req.n,
            _coeffs(req.coeffs),
            _coeffs(req.coeffs2) if req.coeffs2 else None,
            req.k,
            needs_primes=uses_primes(ast),
        )
        outcome = eval_expr(ast, evaluator)
    except ExprSyntaxError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except EvalError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    payload = {"text": req.text, "pretty": pretty(ast), "backend": req.backend}
    payload.update(outcome)
    ok = outcome["holds"] if outcome["kind"] == "verdict" else True
    return Report(kind="expr", ok=ok, payload=payload)
