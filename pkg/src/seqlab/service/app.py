"""FastAPI service exposing the analysis pipeline.

Domain errors map to HTTP 400 with a stable machine-readable body:
{"error": {"type": "<ErrorClass>", "message": "..."}}.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import SeqlabError
from ..estimation import DEFAULT_SCHEDULE, EstimationConfig
from ..pipeline import (
    RunConfig,
    band_energy_report,
    reproduce,
    run_algorithm1,
    table1_csv,
    table1_rows,
    table1_text,
    transform_signal,
)
from ..statevector import RNG_ID
from ..walsh import SequencyBand
from ..zero_crossing import (
    BitString,
    sequence_of,
    zero_crossings_gray,
)
from .models import (
    BandEnergyRequest,
    BandEnergyResponse,
    CoherentStateModel,
    EstimationInfo,
    FileBlob,
    HealthResponse,
    LayoutModel,
    ReproduceRequest,
    ReproduceResponse,
    RunRequest,
    RunResponse,
    Table1Response,
    TransformRequest,
    TransformResponse,
    ZeroCrossingsRequest,
    ZeroCrossingsResponse,
)

_SEQUENCE_LIMIT_QUBITS = 12


def _report_response(report) -> BandEnergyResponse:
    return BandEnergyResponse.model_validate(report.to_dict())


def create_app() -> FastAPI:
    app = FastAPI(title="seqlab", version=__version__)

    @app.exception_handler(SeqlabError)
    async def domain_error(_request: Request, exc: SeqlabError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"type": type(exc).__name__, "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/v1/transform", response_model=TransformResponse)
    def transform(request: TransformRequest) -> TransformResponse:
        coefficients = transform_signal(request.values, request.order, request.engine)
        return TransformResponse(
            order=request.order,
            engine=request.engine,
            n=len(request.values).bit_length() - 1,
            coefficients=[float(c) for c in coefficients],
        )

    @app.post("/v1/zero-crossings", response_model=ZeroCrossingsResponse)
    def zero_crossings(request: ZeroCrossingsRequest) -> ZeroCrossingsResponse:
        word = BitString(request.n, request.s)
        sequence = None
        if request.n <= _SEQUENCE_LIMIT_QUBITS:
            sequence = [int(v) for v in sequence_of(word)]
        return ZeroCrossingsResponse(
            n=request.n,
            s=request.s,
            bits=format(request.s, f"0{request.n}b"),
            count=zero_crossings_gray(word),
            sequence=sequence,
        )

    @app.get("/v1/table1", response_model=Table1Response)
    def table1() -> Table1Response:
        return Table1Response(rows=table1_rows(), csv=table1_csv(), text=table1_text())

    @app.post("/v1/band-energy", response_model=BandEnergyResponse)
    def band_energy(request: BandEnergyRequest) -> BandEnergyResponse:
        config = RunConfig(
            band_start=request.a,
            band_width=request.m,
            mode=request.mode,
            shots=request.shots,
            schedule=tuple(request.schedule) if request.schedule else DEFAULT_SCHEDULE,
            seed=request.seed,
            grid_points=request.grid_points,
            label=request.label,
        )
        return _report_response(band_energy_report(request.values, config))

    @app.post("/v1/run", response_model=RunResponse)
    def run(request: RunRequest) -> RunResponse:
        band = SequencyBand(request.a, request.m)
        if request.estimate:
            config = EstimationConfig(
                mode=request.mode,
                shots_per_round=request.shots,
                schedule=tuple(request.schedule) if request.schedule else DEFAULT_SCHEDULE,
                rng_seed=request.seed,
                grid_points=request.grid_points,
            )
            result = run_algorithm1(request.values, band, True, config)
            return RunResponse(
                estimate=EstimationInfo(
                    mode=result.mode,
                    shots=result.shots,
                    schedule=list(result.schedule) if result.schedule else None,
                    seed=request.seed,
                    rng=RNG_ID,
                    p_est=result.p_est,
                    theta_est=result.theta_est,
                    stderr_est=result.stderr_est,
                )
            )
        output = run_algorithm1(request.values, band, False)
        layout = output.layout
        amplitudes = [[float(a.real), float(a.imag)] for a in output.state.amplitudes]
        return RunResponse(
            state=CoherentStateModel(
                n_qubits=output.state.n_qubits,
                layout=LayoutModel(
                    n_data=layout.n_data,
                    data=list(layout.data),
                    flag=layout.flag,
                    temp1=layout.temp1,
                    temp2=layout.temp2,
                    carries=list(layout.carries),
                    total=layout.total,
                ),
                amplitudes=amplitudes,
                flag_probability=output.flag_probability,
            )
        )

    @app.post("/v1/reproduce", response_model=ReproduceResponse)
    def reproduce_scenario(request: ReproduceRequest) -> ReproduceResponse:
        report, files = reproduce(request.scenario)
        return ReproduceResponse(
            scenario=request.scenario,
            report=_report_response(report),
            files=[FileBlob(name=name, content=content) for name, content in files.items()],
        )

    return app


app = create_app()
