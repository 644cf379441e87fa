"""Band-energy readout: exact, sampled, and maximum-likelihood amplitude
estimation.

The marking circuit A prepares the normalized signal on the data register,
applies the sequency transform, and runs the band oracle, so the flag
probability of A|0> is exactly the band energy p = sin^2(theta). The
amplification operator Q = A S0 A' Schi (A' the adjoint, S0 the reflection
about the all-zeros register, Schi a flag-conditioned phase flip) rotates
the flag amplitude so that after m rounds the flag probability is
sin^2((2m+1) theta), which the likelihood estimator inverts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .band_oracle import REALIZATIONS, build_band_oracle
from .circuits import (
    Circuit,
    GateOp,
    RegisterLayout,
    adjoint,
    concat,
    embed,
    h,
    opaque,
    x,
)
from .errors import InvalidSize, LayoutMismatch
from .qwht import build_qwht
from .statevector import (
    RNG_ID,
    StateVector,
    apply_circuit,
    extend_with_ancillas,
    init_from_signal,
    sample_measurement,
    zero_state,
)
from .walsh import SequencyBand

MODES = ("exact", "sampled", "mlqae")
DEFAULT_SCHEDULE = (0, 1, 2, 4, 8)
DEFAULT_SHOTS = 1000
DEFAULT_GRID_POINTS = 10_000


@dataclass(frozen=True)
class EstimationConfig:
    """How to turn the marked state into a number."""

    mode: str = "exact"
    shots_per_round: int = DEFAULT_SHOTS
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE
    rng_seed: int | None = None
    grid_points: int = DEFAULT_GRID_POINTS

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise InvalidSize(f"unknown estimation mode '{self.mode}'")
        if self.mode != "exact" and self.shots_per_round < 1:
            raise InvalidSize(f"shots_per_round must be positive, got {self.shots_per_round}")
        object.__setattr__(self, "schedule", tuple(int(m) for m in self.schedule))
        if self.mode == "mlqae":
            if not self.schedule:
                raise InvalidSize("mlqae needs a nonempty schedule")
            if any(m < 0 for m in self.schedule):
                raise InvalidSize(f"schedule powers must be nonnegative: {self.schedule}")
            if self.grid_points < 2:
                raise InvalidSize(f"grid_points must be at least 2, got {self.grid_points}")


@dataclass(frozen=True)
class EstimationResult:
    """Estimate of the band energy p and the rotation angle theta."""

    p_est: float
    theta_est: float
    mode: str
    shots: int | None
    schedule: tuple[int, ...] | None
    stderr_est: float


def state_prep_gate(signal, layout: RegisterLayout) -> GateOp:
    """OPAQUE op sending |0..0> on the data register to the normalized signal.

    Realized as the reflection through the bisector of |0..0> and the
    target state (real Householder), which is unitary, self-inverse, and
    acts as the identity on the ancilla qubits.
    """
    target = init_from_signal(signal).amplitudes.real
    n_data = layout.n_data
    dim = 1 << n_data
    delta = -target.copy()
    delta[0] += 1.0
    gap = float(np.linalg.norm(delta))

    if gap < 1e-15:

        def prep(amps: np.ndarray) -> np.ndarray:
            return amps

    else:
        axis = delta / gap

        def prep(amps: np.ndarray) -> np.ndarray:
            # data qubits are the low bits, so each row of this view is one
            # ancilla configuration's data-register slice
            rows = amps.reshape(-1, dim)
            overlap = rows @ axis
            return (rows - 2.0 * np.outer(overlap, axis)).reshape(-1)

    return opaque(tuple(layout.data), "prep", prep, prep)


def _reflect_zero_gate(layout: RegisterLayout) -> GateOp:
    def reflect(amps: np.ndarray) -> np.ndarray:
        out = amps.copy()
        out[0] = -out[0]
        return out

    return opaque(tuple(range(layout.total)), "reflect0", reflect, reflect)


def marking_circuit(signal, band: SequencyBand, realization: str = "semantic") -> tuple[Circuit, RegisterLayout]:
    """The circuit A = prep, sequency transform, band oracle, on the full register."""
    if realization not in REALIZATIONS:
        raise ValueError(f"unknown realization '{realization}'")
    state = init_from_signal(signal)
    layout = RegisterLayout(state.n_qubits)
    band.validate(layout.n_data)
    ops = (state_prep_gate(signal, layout),)
    ops += embed(build_qwht(layout.n_data), layout.total).ops
    ops += build_band_oracle(layout.n_data, band, realization).ops
    return Circuit(layout.total, ops), layout


def marked_state(signal, band: SequencyBand, realization: str = "semantic") -> tuple[StateVector, RegisterLayout]:
    """A|0>: the signal loaded, transformed, and flag-marked.

    Initializes the register from the signal directly rather than through
    the prep unitary; cancellations in the transform then stay exact, so a
    signal with no (or full) band energy yields exact zeros off (or on)
    the flag.
    """
    if realization not in REALIZATIONS:
        raise ValueError(f"unknown realization '{realization}'")
    data = init_from_signal(signal)
    layout = RegisterLayout(data.n_qubits)
    band.validate(layout.n_data)
    circuit = concat(
        embed(build_qwht(layout.n_data), layout.total),
        build_band_oracle(layout.n_data, band, realization),
    )
    return apply_circuit(extend_with_ancillas(data, layout.total), circuit), layout


def grover_operator(prep: Circuit, oracle: Circuit, layout: RegisterLayout) -> Circuit:
    """Amplification operator Q = A S0 A' Schi with A = prep, transform, oracle.

    Ops are listed in application order, so Schi (a flag-qubit phase flip,
    H X H) comes first and A last. A global sign relative to the textbook
    operator is dropped; it cancels in every probability.
    """
    for part, name in ((prep, "prep"), (oracle, "oracle")):
        if part.n_qubits != layout.total:
            raise LayoutMismatch(
                f"{name} circuit covers {part.n_qubits} qubits, layout expects {layout.total}"
            )
    a_ops = prep.ops
    a_ops += embed(build_qwht(layout.n_data), layout.total).ops
    a_ops += oracle.ops
    a_circuit = Circuit(layout.total, a_ops)
    flag = layout.flag
    ops = (h(flag), x(flag), h(flag))  # phase flip on flag = 1
    ops += adjoint(a_circuit).ops
    ops += (_reflect_zero_gate(layout),)
    ops += a_circuit.ops
    return Circuit(layout.total, ops)


def _flag_hits(state: StateVector, layout: RegisterLayout, shots: int, seed: int | None) -> int:
    histogram = sample_measurement(state, shots, seed)
    flag_bit = 1 << layout.flag
    return sum(count for index, count in histogram.items() if index & flag_bit)


def _mlqae_maximize(schedule: np.ndarray, hits: np.ndarray, shots: int, grid_points: int) -> float:
    """Grid search plus golden-section refinement of the log-likelihood.

    Ties resolve toward the smaller angle because the grid is scanned in
    ascending order.
    """
    depth = 2.0 * schedule + 1.0
    misses = shots - hits

    def log_likelihood(theta: np.ndarray) -> np.ndarray:
        angles = np.multiply.outer(theta, depth)
        sin_abs = np.maximum(np.abs(np.sin(angles)), 1e-300)
        cos_abs = np.maximum(np.abs(np.cos(angles)), 1e-300)
        return 2.0 * (hits * np.log(sin_abs) + misses * np.log(cos_abs)).sum(axis=-1)

    grid = np.linspace(0.0, math.pi / 2.0, grid_points)
    values = log_likelihood(grid)
    best = int(np.argmax(values))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, grid_points - 1)]

    ratio = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - ratio * (b - a)
    d = a + ratio * (b - a)
    fc = float(log_likelihood(np.array([c]))[0])
    fd = float(log_likelihood(np.array([d]))[0])
    for _ in range(200):
        if b - a < 1e-14:
            break
        if fc >= fd:  # keep the left interval on ties: smaller angle wins
            b, d, fd = d, c, fc
            c = b - ratio * (b - a)
            fc = float(log_likelihood(np.array([c]))[0])
        else:
            a, c, fc = c, d, fd
            d = a + ratio * (b - a)
            fd = float(log_likelihood(np.array([d]))[0])
    return float((a + b) / 2.0)


def _mlqae_stderr(theta: float, schedule: np.ndarray, hits: np.ndarray, shots: int) -> float:
    """Delta-method error on p from the observed Fisher information."""
    depth = 2.0 * schedule + 1.0
    angles = theta * depth
    sin_sq = np.maximum(np.sin(angles) ** 2, 1e-300)
    cos_sq = np.maximum(np.cos(angles) ** 2, 1e-300)
    misses = shots - hits
    information = float(np.sum(2.0 * depth**2 * (hits / sin_sq + misses / cos_sq)))
    if information <= 0.0:
        return float("inf")
    return abs(math.sin(2.0 * theta)) / math.sqrt(information)


def _exact_flag_probability(state: StateVector, layout: RegisterLayout) -> float:
    """Flag probability with exact endpoints when the complement mass is zero."""
    probs = state.probabilities()
    idx = np.arange(probs.shape[0])
    on_flag = (idx >> layout.flag) & 1 == 1
    p_one = float(probs[on_flag].sum())
    p_zero = float(probs[~on_flag].sum())
    if p_one == 0.0:
        return 0.0
    if p_zero == 0.0:
        return 1.0
    return min(max(p_one, 0.0), 1.0)


def estimate(signal, band: SequencyBand, config: EstimationConfig | None = None) -> EstimationResult:
    """Estimate the band energy of the signal through the quantum pipeline."""
    if config is None:
        config = EstimationConfig()
    marked, layout = marked_state(signal, band)

    if config.mode == "exact":
        p = _exact_flag_probability(marked, layout)
        return EstimationResult(
            p_est=p,
            theta_est=math.asin(math.sqrt(p)),
            mode="exact",
            shots=None,
            schedule=None,
            stderr_est=0.0,
        )

    if config.mode == "sampled":
        shots = config.shots_per_round
        hits = _flag_hits(marked, layout, shots, config.rng_seed)
        p = hits / shots
        stderr = math.sqrt(p * (1.0 - p) / shots)
        return EstimationResult(
            p_est=p,
            theta_est=math.asin(math.sqrt(p)),
            mode="sampled",
            shots=shots,
            schedule=None,
            stderr_est=stderr,
        )

    # mlqae: the amplification operator needs state preparation as a unitary
    shots = config.shots_per_round
    prep = Circuit(layout.total, (state_prep_gate(signal, layout),))
    oracle = build_band_oracle(layout.n_data, band, "semantic")
    grover = grover_operator(prep, oracle, layout)
    circuit_a, _ = marking_circuit(signal, band)
    marked = apply_circuit(zero_state(layout.total), circuit_a)
    seeds = np.random.SeedSequence(config.rng_seed).generate_state(len(config.schedule))
    hits = np.zeros(len(config.schedule), dtype=np.int64)
    state = marked
    previous_power = 0
    order = np.argsort(np.asarray(config.schedule))
    for position in order:
        power = config.schedule[position]
        for _ in range(power - previous_power):
            state = apply_circuit(state, grover)
        previous_power = power
        hits[position] = _flag_hits(state, layout, shots, int(seeds[position]))
    schedule_arr = np.asarray(config.schedule, dtype=np.float64)
    theta = _mlqae_maximize(schedule_arr, hits.astype(np.float64), shots, config.grid_points)
    p = math.sin(theta) ** 2
    stderr = _mlqae_stderr(theta, schedule_arr, hits.astype(np.float64), shots)
    return EstimationResult(
        p_est=p,
        theta_est=theta,
        mode="mlqae",
        shots=shots,
        schedule=tuple(config.schedule),
        stderr_est=stderr,
    )
