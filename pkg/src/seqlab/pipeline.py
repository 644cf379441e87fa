"""End-to-end band-energy analysis: parse, transform, mark, estimate, report.

The reference scenarios are three 8-sample signals analyzed over the
three-band sequency partition [0, 2), [2, 5), [5, 8): a constant signal
(all energy in the lowest band), a step edge (energy split across the low
and middle bands), and the fastest alternation (all energy in the top
band).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .circuits import RegisterLayout
from .errors import NotPowerOfTwo, ParseError, ZeroVector
from .estimation import (
    DEFAULT_GRID_POINTS,
    DEFAULT_SCHEDULE,
    DEFAULT_SHOTS,
    EstimationConfig,
    EstimationResult,
    estimate,
    marked_state,
)
from .band_oracle import flag_probability
from .qwht import build_qwht, natural_circuit
from .reports import (
    SCHEMA_VERSION,
    bar_chart_svg,
    canonical_json,
    series_csv,
    signal_digest,
)
from .statevector import RNG_ID, StateVector, apply_circuit, init_from_signal
from .walsh import SequencyBand, fwht_natural, fwht_sequency
from .zero_crossing import BitString, sequence_of, zero_crossings_gray

SCENARIO_ORDER = ("dc", "edge", "alternating")
SCENARIO_BAND = SequencyBand(2, 3)
_SCENARIO_N = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed analysis request: target band plus estimation settings."""

    band_start: int
    band_width: int
    mode: str = "exact"
    shots: int = DEFAULT_SHOTS
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE
    seed: int | None = None
    grid_points: int = DEFAULT_GRID_POINTS
    label: str = "signal"

    def estimation_config(self, seed: int | None) -> EstimationConfig:
        return EstimationConfig(
            mode=self.mode,
            shots_per_round=self.shots,
            schedule=self.schedule,
            rng_seed=seed,
            grid_points=self.grid_points,
        )


@dataclass(frozen=True)
class BandSlice:
    lo: int
    hi: int
    probability: float
    stderr: float

    def to_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "probability": self.probability,
            "stderr": self.stderr,
        }


@dataclass(frozen=True)
class BandEnergyReport:
    """Everything a run produced, ready for serialization."""

    n: int
    label: str
    length: int
    sha256: str
    bands: tuple[BandSlice, ...]
    mode: str
    shots: int | None
    schedule: tuple[int, ...] | None
    seed: int | None
    rng: str
    p_est: float
    theta_est: float
    stderr_est: float
    spectrum: tuple[float, ...]
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "n": self.n,
            "signal": {"label": self.label, "length": self.length, "sha256": self.sha256},
            "bands": [band.to_dict() for band in self.bands],
            "estimation": {
                "mode": self.mode,
                "shots": self.shots,
                "schedule": list(self.schedule) if self.schedule is not None else None,
                "seed": self.seed,
                "rng": self.rng,
                "p_est": self.p_est,
                "theta_est": self.theta_est,
                "stderr_est": self.stderr_est,
            },
            "spectrum": list(self.spectrum),
        }


@dataclass(frozen=True)
class CoherentOutput:
    """Marked state left coherent for downstream use."""

    state: StateVector
    layout: RegisterLayout
    flag_probability: float


def scenario_signal(name: str) -> np.ndarray:
    """Reference 8-sample signals: dc, edge (step at sample 6), alternating."""
    size = 1 << _SCENARIO_N
    if name == "dc":
        return np.ones(size)
    if name == "edge":
        return np.where(np.arange(size) < 6, 1.0, -1.0)
    if name == "alternating":
        return np.where(np.arange(size) % 2 == 0, 1.0, -1.0)
    raise ParseError(f"unknown scenario '{name}'")


def ingest_signal(path) -> np.ndarray:
    """Read and validate a real signal: one value per line, comma-separated,
    or an `index,value` CSV as written by this package. The sample count
    must be a power of two and at least one sample must be nonzero."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError(f"{path}: empty signal file")
    if lines[0].replace(" ", "") == "index,value":
        tokens = [line.split(",")[1] for line in lines[1:]]
    else:
        tokens = re.split(r"[,\s]+", " ".join(lines))
        tokens = [t for t in tokens if t]
    values = []
    for token in tokens:
        try:
            v = float(token)
        except ValueError as exc:
            raise ParseError(f"{path}: cannot parse '{token}' as a real number") from exc
        if not math.isfinite(v):
            raise ParseError(f"{path}: non-finite sample '{token}'")
        values.append(v)
    samples = np.asarray(values, dtype=np.float64)
    count = samples.shape[0]
    if count < 2 or count & (count - 1):
        raise NotPowerOfTwo(f"{path}: signal length {count} is not 2**n with n >= 1")
    if not np.any(samples):
        raise ZeroVector(f"{path}: signal has no energy")
    return samples


def transform_signal(values, order: str = "sequency", engine: str = "classical") -> np.ndarray:
    """Walsh transform of a raw signal by either engine.

    The classical engine runs the fast transform directly. The quantum
    engine prepares the normalized state, runs the transform circuit, and
    rescales by the signal norm so both engines agree coefficient for
    coefficient.
    """
    if order not in ("natural", "sequency"):
        raise ParseError(f"unknown order '{order}'")
    if engine not in ("classical", "quantum"):
        raise ParseError(f"unknown engine '{engine}'")
    if engine == "classical":
        spectrum = fwht_sequency(values) if order == "sequency" else fwht_natural(values)
        return spectrum.coefficients
    state = init_from_signal(values)
    norm = float(np.linalg.norm(np.asarray(values, dtype=np.float64)))
    circuit = build_qwht(state.n_qubits) if order == "sequency" else natural_circuit(state.n_qubits)
    transformed = apply_circuit(state, circuit)
    return transformed.amplitudes.real * norm


def run_algorithm1(signal, band: SequencyBand, estimate_flag: bool = True,
                   config: EstimationConfig | None = None,
                   realization: str = "semantic") -> CoherentOutput | EstimationResult:
    """Prepare, transform, and mark the signal; optionally estimate.

    With estimation off, the marked register is returned coherent so the
    flag can feed further processing.
    """
    if estimate_flag:
        return estimate(signal, band, config)
    state, layout = marked_state(signal, band, realization)
    return CoherentOutput(state, layout, flag_probability(state, layout))


def band_energy_report(signal, config: RunConfig) -> BandEnergyReport:
    """Analyze a signal over the partition [0, a), [a, a+M), [a+M, N).

    Every nonempty band goes through the quantum pipeline with the
    configured estimation mode; empty edge bands are exactly zero. The
    middle band is the analysis target reported in the estimation block.
    """
    values = np.asarray(signal, dtype=np.float64)
    state = init_from_signal(values)  # validates length and energy
    n = state.n_qubits
    size = 1 << n
    target = SequencyBand(config.band_start, config.band_width)
    target.validate(n)

    windows = (
        (0, config.band_start),
        (config.band_start, target.stop),
        (target.stop, size),
    )
    if config.seed is None:
        band_seeds: list[int | None] = [None, None, None]
    else:
        band_seeds = [int(s) for s in np.random.SeedSequence(config.seed).generate_state(3)]

    results: list[EstimationResult] = []
    bands: list[BandSlice] = []
    for (lo, hi), band_seed in zip(windows, band_seeds):
        if hi == lo:
            results.append(EstimationResult(0.0, 0.0, config.mode, None, None, 0.0))
            bands.append(BandSlice(lo, hi, 0.0, 0.0))
            continue
        result = estimate(values, SequencyBand(lo, hi - lo), config.estimation_config(band_seed))
        results.append(result)
        bands.append(BandSlice(lo, hi, result.p_est, result.stderr_est))

    middle = results[1]
    spectrum = fwht_sequency(values / np.linalg.norm(values)).coefficients
    return BandEnergyReport(
        n=n,
        label=config.label,
        length=size,
        sha256=signal_digest(values),
        bands=tuple(bands),
        mode=config.mode,
        shots=middle.shots,
        schedule=middle.schedule,
        seed=config.seed,
        rng=RNG_ID,
        p_est=middle.p_est,
        theta_est=middle.theta_est,
        stderr_est=middle.stderr_est,
        spectrum=tuple(float(c) for c in spectrum),
    )


def reproduce(scenario: str) -> tuple[BandEnergyReport, dict[str, str]]:
    """Run a reference scenario; return its report and rendered artifacts.

    Artifacts: the time-domain series, the sequency spectrum, and the
    band-energy partition, each as an `index,value` CSV plus an SVG bar
    chart, and the canonical JSON report.
    """
    signal = scenario_signal(scenario)
    config = RunConfig(
        band_start=SCENARIO_BAND.start,
        band_width=SCENARIO_BAND.width,
        mode="exact",
        label=scenario,
    )
    report = band_energy_report(signal, config)

    sample_labels = [str(i) for i in range(signal.shape[0])]
    band_labels = [f"[{band.lo},{band.hi})" for band in report.bands]
    band_values = [band.probability for band in report.bands]
    files = {
        f"{scenario}_signal.csv": series_csv(signal),
        f"{scenario}_signal.svg": bar_chart_svg(
            list(signal), sample_labels, f"{scenario}: time domain"
        ),
        f"{scenario}_spectrum.csv": series_csv(report.spectrum),
        f"{scenario}_spectrum.svg": bar_chart_svg(
            list(report.spectrum), sample_labels, f"{scenario}: sequency spectrum"
        ),
        f"{scenario}_bands.csv": series_csv(band_values),
        f"{scenario}_bands.svg": bar_chart_svg(
            band_values, band_labels, f"{scenario}: band energy"
        ),
        f"{scenario}_report.json": canonical_json(report.to_dict()) + "\n",
    }
    return report, files


def table1_rows() -> list[dict]:
    """All eight 3-bit words with their signed sequences and crossing counts."""
    rows = []
    for value in range(8):
        word = BitString(_SCENARIO_N, value)
        rows.append(
            {
                "s": format(value, "03b"),
                "sequence": [int(v) for v in sequence_of(word)],
                "count": zero_crossings_gray(word),
            }
        )
    return rows


def table1_csv() -> str:
    lines = ["s,sequence,count"]
    for row in table1_rows():
        seq = " ".join(str(v) for v in row["sequence"])
        lines.append(f"{row['s']},{seq},{row['count']}")
    return "\n".join(lines) + "\n"


def table1_text() -> str:
    lines = ["  s    sequence                    zero crossings"]
    for row in table1_rows():
        seq = " ".join(f"{v:+d}" for v in row["sequence"])
        lines.append(f" {row['s']}   {seq}     {row['count']}")
    return "\n".join(lines)
