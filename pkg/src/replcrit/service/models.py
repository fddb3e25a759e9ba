"""Request and response schemas for the HTTP service.

Every computation result the service returns is described here; the JSON
schema shipped with the package is generated from these models, and reports
validate against it.  Rationals are serialized as "p/q" strings (or "p"
when integral).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


# --- graphs and generation --------------------------------------------------


class GenerateRequest(BaseModel):
    n: int = Field(ge=4, description="number of columns")


class GenerateResponse(BaseModel):
    n: int
    vertices: int
    edges: int
    graph6: str
    columns: list[list[int]]
    rows: list[list[int]]


class GraphRequest(BaseModel):
    graph6: str


class ChromaticResponse(BaseModel):
    graph6: str
    vertices: int
    chi: int
    colors: list[int]


class CriticalityRequest(BaseModel):
    graph6: str
    k: int = Field(ge=1)
    edges: bool = False


class CriticalityResponse(BaseModel):
    graph6: str
    k: int
    chi: int
    per_vertex_chi: list[int]
    per_edge_chi: Optional[list[int]] = None
    edge_list: Optional[list[list[int]]] = None
    is_vertex_critical: bool
    is_edge_critical: Optional[bool] = None


class SetWeight(BaseModel):
    vertices: list[int]
    weight: str


class VertexWeight(BaseModel):
    vertex: int
    weight: str


class FractionalResponse(BaseModel):
    graph6: str
    vertices: int
    value: str
    weights: list[SetWeight]
    dual: list[VertexWeight]
    fractional_gap_condition: bool
    chi: int


# --- replication ------------------------------------------------------------


class ReplicateRequest(BaseModel):
    n: int = Field(ge=4)
    w: str = Field(description="vertex literal like '0,0;1,2' (may be empty)")


class CloneInfo(BaseModel):
    index: int
    original: int
    name: str


class ReplicateResponse(BaseModel):
    n: int
    w: str
    base_graph6: str
    graph6: str
    vertices: int
    edges: int
    clones: list[CloneInfo]


# --- sign sequences and strolls ----------------------------------------------


class EncodeSigmaRequest(BaseModel):
    n: int = Field(ge=4)
    w: str = Field(description="one vertex per column, e.g. '0,0;1,1;2,2;3,0'")


class EncodeSigmaResponse(BaseModel):
    n: int
    w: str
    rows: list[int]
    sigma: str
    z: int


class StrollModel(BaseModel):
    sigma: str
    patterns: list[str]


class ClassifySigmaRequest(BaseModel):
    sigma: str


class ClassifySigmaResponse(BaseModel):
    sigma: str
    z: int
    good: bool
    reversing: bool
    good_stroll: Optional[StrollModel] = None
    reversing_stroll: Optional[StrollModel] = None


# --- theorem and conjecture ---------------------------------------------------


class VerifyTheoremRequest(BaseModel):
    n: int = Field(ge=4, le=6)
    mode: Literal["constructive", "solver", "both"] = "both"
    jobs: int = Field(default=1, ge=1)
    seed: int = 0
    audit_rate: float = Field(default=0.01, ge=0.0, le=1.0)
    detail: Literal["auto", "full", "sparse"] = "auto"


class SubsetEntry(BaseModel):
    w: list[int]
    w_name: str
    case: str
    chi: Optional[int] = None
    chi_lower: Optional[int] = None
    chi_upper: Optional[int] = None
    five_critical: bool
    certificate: dict
    source: str


class TheoremResponse(BaseModel):
    n: int
    mode: str
    subset_count: int
    case_counts: dict[str, int]
    five_critical: list[list[int]]
    disagreements: list[dict]
    falsifications: list[dict]
    audited: int
    entries: list[SubsetEntry]
    entries_policy: str
    passed: bool


class ConjectureRequest(BaseModel):
    graph6: str
    k: int = Field(ge=1)


class ConjectureResponse(BaseModel):
    graph6: str
    k: int
    holds: bool
    witness: Optional[list[int]] = None
    subsets_checked: int
    witness_report: Optional[CriticalityResponse] = None


# --- corpus scan --------------------------------------------------------------


class ScanRequest(BaseModel):
    text: str = Field(description="graph6 lines, one per graph")
    k: int = Field(ge=1)
    filter_edge_critical: bool = False
    jobs: int = Field(default=1, ge=1)


class ScanEntryModel(BaseModel):
    line: int
    graph6: str
    vertices: Optional[int] = None
    error: Optional[str] = None
    skipped: Optional[str] = None
    edge_critical: Optional[bool] = None
    holds: Optional[bool] = None
    witness: Optional[list[int]] = None
    subsets_checked: Optional[int] = None
    seconds: float


class ScanResponse(BaseModel):
    k: int
    filter_edge_critical: bool
    corpus_sha256: str
    entries: list[ScanEntryModel]
    counterexamples: list[str]


# --- cover ideal export --------------------------------------------------------


class CoverExportRequest(BaseModel):
    graph6: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=4, description="columns, when exporting the stock construction")
    max_power: int = Field(default=4, ge=1)


class CoverExportResponse(BaseModel):
    graph6: str
    vertices: int
    generators: list[list[int]]
    script: str
