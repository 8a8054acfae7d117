"""Pydantic request/response models for the HTTP service.

All numeric payloads are strings in the scalar grammar; the service never
moves a value through a float.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

BackendTag = Literal["rational", "gaussian", "float"]


class VectorDoc(BaseModel):
    backend: BackendTag = "rational"
    elements: list[str] = Field(min_length=1)
    label: Optional[str] = None


class CheckRequest(BaseModel):
    vector: VectorDoc
    h: int = Field(ge=1)
    g: Optional[int] = Field(default=None, ge=1)
    tolerance: float = 0.0


class CheckResponse(BaseModel):
    is_bh: Optional[bool] = None
    has_distinct_coords: Optional[bool] = None
    collision_witness: Optional[list[list[int]]] = None
    is_bhg: Optional[bool] = None
    g_max: Optional[int] = None
    g: Optional[int] = None


class MarginRequest(BaseModel):
    vector: VectorDoc
    h: int = Field(ge=1)


class MarginResponse(BaseModel):
    delta: str
    radius: str
    squared: bool


class RepairRequest(BaseModel):
    vector: VectorDoc
    h: int = Field(ge=1)
    epsilon: str


class RepairResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    c: list[str]
    scale: str = Field(alias="lambda")
    delta_u: Optional[str] = None
    verified: bool


class ProfileRequest(BaseModel):
    vector: VectorDoc
    h: int = Field(ge=1)
    tolerance: float = 0.0


class ProfileSum(BaseModel):
    value: str
    reps: list[list[int]]


class ProfileResponse(BaseModel):
    h: int
    sums: list[ProfileSum]
    g_max: int


class SweepRequest(BaseModel):
    vector: VectorDoc
    h_max: int = Field(ge=1)


class SweepEntry(BaseModel):
    h: int
    is_bh: bool
    has_distinct_coords: bool
    collision_witness: Optional[list[list[int]]] = None


class SweepResponse(BaseModel):
    verdicts: list[SweepEntry]
    all_bh: bool


class ProbeRequest(BaseModel):
    vector: VectorDoc
    h: int = Field(ge=1)
    g: int = Field(ge=1)
    radius: str
    samples: int = Field(ge=0, le=10_000)
    seed: int = 0


class ProbeResponse(BaseModel):
    kind: str
    center: list[str]
    backend: BackendTag
    h: int
    g: int
    samples: int
    radius: str
    seed: int
    frequencies: dict[str, int]
    observed_min: Optional[int] = None
    observed_max: Optional[int] = None
    counterexamples: list[list[str]]


class CompositionsRequest(BaseModel):
    h: int = Field(ge=1)
    n: int = Field(ge=1)


class CompositionsResponse(BaseModel):
    h: int
    n: int
    count: int
    compositions: list[list[int]]


class SampleRequest(BaseModel):
    n: int = Field(ge=1)
    h: int = Field(ge=1)
    samples: int = Field(ge=0, le=100_000)
    seed: int = 0
    range: int = Field(ge=0)


class SampleEntry(BaseModel):
    vector: list[str]
    is_bh: bool
    margin: Optional[str] = None


class SampleResponse(BaseModel):
    entries: list[SampleEntry]
    samples: int
    bh_count: int
    rate: Optional[str] = None


class ErrorDetail(BaseModel):
    code: str
    message: str
