"""Request and response schemas for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class TransformRequest(BaseModel):
    values: list[float] = Field(min_length=2)
    order: Literal["natural", "sequency"] = "sequency"
    engine: Literal["classical", "quantum"] = "classical"


class TransformResponse(BaseModel):
    order: str
    engine: str
    n: int
    coefficients: list[float]


class ZeroCrossingsRequest(BaseModel):
    n: int = Field(ge=1, le=24)
    s: int = Field(ge=0)


class ZeroCrossingsResponse(BaseModel):
    n: int
    s: int
    bits: str
    count: int
    sequence: Optional[list[int]] = None


class Table1Row(BaseModel):
    s: str
    sequence: list[int]
    count: int


class Table1Response(BaseModel):
    rows: list[Table1Row]
    csv: str
    text: str


class BandEnergyRequest(BaseModel):
    values: list[float] = Field(min_length=2)
    a: int = Field(ge=0)
    m: int = Field(ge=1)
    mode: Literal["exact", "sampled", "mlqae"] = "exact"
    shots: int = Field(default=1000, ge=1)
    schedule: Optional[list[int]] = None
    seed: Optional[int] = None
    grid_points: int = Field(default=10_000, ge=2)
    label: str = "signal"


class SignalInfo(BaseModel):
    label: str
    length: int
    sha256: str


class BandSliceModel(BaseModel):
    lo: int
    hi: int
    probability: float
    stderr: float


class EstimationInfo(BaseModel):
    mode: str
    shots: Optional[int]
    schedule: Optional[list[int]]
    seed: Optional[int]
    rng: str
    p_est: float
    theta_est: float
    stderr_est: float


class BandEnergyResponse(BaseModel):
    schema_version: str
    n: int
    signal: SignalInfo
    bands: list[BandSliceModel]
    estimation: EstimationInfo
    spectrum: list[float]


class RunRequest(BaseModel):
    values: list[float] = Field(min_length=2)
    a: int = Field(ge=0)
    m: int = Field(ge=1)
    estimate: bool = True
    mode: Literal["exact", "sampled", "mlqae"] = "exact"
    shots: int = Field(default=1000, ge=1)
    schedule: Optional[list[int]] = None
    seed: Optional[int] = None
    grid_points: int = Field(default=10_000, ge=2)


class LayoutModel(BaseModel):
    n_data: int
    data: list[int]
    flag: int
    temp1: int
    temp2: int
    carries: list[int]
    total: int


class CoherentStateModel(BaseModel):
    n_qubits: int
    layout: LayoutModel
    amplitudes: list[list[float]]
    flag_probability: float


class RunResponse(BaseModel):
    estimate: Optional[EstimationInfo] = None
    state: Optional[CoherentStateModel] = None


class ReproduceRequest(BaseModel):
    scenario: Literal["dc", "edge", "alternating"]


class FileBlob(BaseModel):
    name: str
    content: str


class ReproduceResponse(BaseModel):
    scenario: str
    report: BandEnergyResponse
    files: list[FileBlob]
