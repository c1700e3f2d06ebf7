"""Pydantic request/response models for the service (and the CLI client)."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class QuiverRequest(BaseModel):
    quiver: str
    allow_long: bool = False
    threads: int = Field(default=1, ge=1, le=64)


class QuiverInfo(BaseModel):
    quiver: str
    diagram_type: str
    rank: int
    arrows: list[list[int]]
    sinks: list[int]
    sources: list[int]
    sink_order: list[int]
    coxeter_number: int
    exponents: list[int]
    positive_roots: int
    domain_size: int


class ObjectModel(BaseModel):
    root: list[int]
    shift: Literal[0, 1]


class EnumerateResponse(BaseModel):
    quiver: str
    count: int
    configurations: list[list[ObjectModel]]
    labels: list[str]


class CountRequest(QuiverRequest):
    what: Literal["homconf", "nc", "ncpos"]


class CountResponse(BaseModel):
    quiver: str
    what: str
    count: int
    closed_form: int
    matches: bool


class VerifyRequest(QuiverRequest):
    suite: str = "all"


class CheckModel(BaseModel):
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


class RunReport(BaseModel):
    command: str
    quiver: str
    counts: dict[str, int]
    checks: list[CheckModel]
    passed: bool
    wall_time_s: float


class NCRequest(QuiverRequest):
    positive: bool = False
    include_elements: bool = True


class NCElementModel(BaseModel):
    matrix: list[list[int]]
    word: list[list[int]]
    length: int
    positive: bool


class NCResponse(BaseModel):
    quiver: str
    count: int
    elements: Optional[list[NCElementModel]] = None


class MutationGraphRequest(QuiverRequest):
    include_dot: bool = False


class MutationGraphResponse(BaseModel):
    quiver: str
    nodes: list[list[ObjectModel]]
    labels: list[str]
    edges: list[list[int]]
    connected: bool
    dot: Optional[str] = None


class HomTableResponse(BaseModel):
    quiver: str
    objects: list[ObjectModel]
    dims: list[list[int]]
    sha256: str


class TypeAPartitionRequest(BaseModel):
    n: int = Field(ge=1)
    partition: str


class TypeAGammaResponse(BaseModel):
    n: int
    partition: str
    objects: list[ObjectModel]
    labels: list[str]


class TypeAFResponse(BaseModel):
    n: int
    partition: str
    image: str
    positive: bool


class TypeACheckRequest(BaseModel):
    n: int = Field(ge=1)


class ErrorBody(BaseModel):
    detail: str
    kind: Literal["input", "invariant"]
