"""HTTP service exposing the exact sumset analysis kernels.

Run with: uvicorn bhset.service.app:app
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..analysis import certify, is_bh
from ..bhg import bh_sweep, probe_openness
from ..cli import iter_samples
from ..compositions import count_compositions, enumerate_compositions
from ..errors import (
    BhSetError,
    BudgetExceededError,
    CountOverflowError,
    DegenerateVectorError,
    NotBhVectorError,
    VerificationFailedError,
)
from ..jsonio import (
    certificate_to_doc,
    doc_to_vector,
    probe_to_doc,
    profile_to_doc,
    repair_to_doc,
    verdict_to_doc,
)
from ..oracle import oracle_profile
from ..repair import repair
from ..scalars import RATIONAL, parse_scalar
from ..sumset import build_profile, g_max
from . import schemas

COMPOSITIONS_CAP = 10**6

app = FastAPI(
    title="bhset",
    version=__version__,
    description="Exact membership checks, openness certificates, and repair "
    "constructions for sumset separation properties.",
)

_UNPROCESSABLE = (
    NotBhVectorError,
    DegenerateVectorError,
    BudgetExceededError,
    CountOverflowError,
)


@app.exception_handler(BhSetError)
def _domain_error(request: Request, exc: BhSetError):
    if isinstance(exc, VerificationFailedError):
        status = 500
    elif isinstance(exc, _UNPROCESSABLE):
        status = 422
    else:
        status = 400
    detail = schemas.ErrorDetail(code=type(exc).__name__, message=str(exc))
    return JSONResponse(status_code=status, content={"detail": detail.model_dump()})


@app.exception_handler(ValueError)
def _value_error(request: Request, exc: ValueError):
    detail = schemas.ErrorDetail(code="ValueError", message=str(exc))
    return JSONResponse(status_code=400, content={"detail": detail.model_dump()})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/check", response_model=schemas.CheckResponse, response_model_exclude_none=True)
def check(req: schemas.CheckRequest):
    vector = doc_to_vector(req.vector.model_dump())
    if req.g is not None:
        gm = g_max(build_profile(vector, req.h, req.tolerance))
        return schemas.CheckResponse(is_bhg=gm <= req.g, g_max=gm, g=req.g)
    verdict = is_bh(vector, req.h, req.tolerance)
    return schemas.CheckResponse(**verdict_to_doc(verdict))


@app.post("/margin", response_model=schemas.MarginResponse)
def margin_endpoint(req: schemas.MarginRequest):
    vector = doc_to_vector(req.vector.model_dump())
    return schemas.MarginResponse(**certificate_to_doc(certify(vector, req.h)))


@app.post("/certify", response_model=schemas.MarginResponse)
def certify_endpoint(req: schemas.MarginRequest):
    vector = doc_to_vector(req.vector.model_dump())
    return schemas.MarginResponse(**certificate_to_doc(certify(vector, req.h)))


@app.post("/repair", response_model=schemas.RepairResponse)
def repair_endpoint(req: schemas.RepairRequest):
    vector = doc_to_vector(req.vector.model_dump())
    epsilon = Fraction(parse_scalar(req.epsilon, RATIONAL))
    report = repair(vector, req.h, epsilon)
    return schemas.RepairResponse(**repair_to_doc(report))


@app.post("/profile", response_model=schemas.ProfileResponse)
def profile_endpoint(req: schemas.ProfileRequest):
    vector = doc_to_vector(req.vector.model_dump())
    return schemas.ProfileResponse(**profile_to_doc(build_profile(vector, req.h, req.tolerance)))


@app.post("/oracle/profile", response_model=schemas.ProfileResponse)
def oracle_profile_endpoint(req: schemas.ProfileRequest):
    vector = doc_to_vector(req.vector.model_dump())
    return schemas.ProfileResponse(**profile_to_doc(oracle_profile(vector, req.h)))


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep_endpoint(req: schemas.SweepRequest):
    vector = doc_to_vector(req.vector.model_dump())
    verdicts = bh_sweep(vector, req.h_max)
    entries = [
        schemas.SweepEntry(h=h, **verdict_to_doc(verdict)) for h, verdict in verdicts
    ]
    return schemas.SweepResponse(
        verdicts=entries, all_bh=all(v.is_bh for _, v in verdicts)
    )


@app.post("/probe", response_model=schemas.ProbeResponse)
def probe_endpoint(req: schemas.ProbeRequest):
    vector = doc_to_vector(req.vector.model_dump())
    radius = Fraction(parse_scalar(req.radius, RATIONAL))
    report = probe_openness(vector, req.h, req.g, req.samples, radius, req.seed)
    return schemas.ProbeResponse(**probe_to_doc(report))


@app.post("/compositions", response_model=schemas.CompositionsResponse)
def compositions_endpoint(req: schemas.CompositionsRequest):
    total = count_compositions(req.h, req.n)
    if total > COMPOSITIONS_CAP:
        raise BudgetExceededError(
            f"count({req.h},{req.n}) = {total} exceeds the response cap {COMPOSITIONS_CAP}"
        )
    return schemas.CompositionsResponse(
        h=req.h,
        n=req.n,
        count=total,
        compositions=[list(c) for c in enumerate_compositions(req.h, req.n)],
    )


@app.post("/sample", response_model=schemas.SampleResponse)
def sample_endpoint(req: schemas.SampleRequest):
    entries = []
    bh_count = 0
    for doc in iter_samples(req.n, req.h, req.samples, req.seed, req.range):
        bh_count += bool(doc["is_bh"])
        entries.append(schemas.SampleEntry(**doc))
    rate = None if req.samples == 0 else str(Fraction(bh_count, req.samples))
    return schemas.SampleResponse(
        entries=entries, samples=req.samples, bh_count=bh_count, rate=rate
    )
