import math

import numpy as np
import pytest

from seqlab import (
    EstimationConfig,
    SequencyBand,
    band_energy_classical,
    estimate,
    fwht_sequency,
    grover_operator,
    marked_state,
    marking_circuit,
)
from seqlab.band_oracle import build_band_oracle, flag_probability
from seqlab.circuits import Circuit, RegisterLayout
from seqlab.errors import InvalidSize, LayoutMismatch
from seqlab.estimation import DEFAULT_SCHEDULE, DEFAULT_SHOTS, state_prep_gate
from seqlab.statevector import apply_circuit, apply_gate, zero_state

_DC = np.ones(8)
_ALTERNATING = np.array([1.0, -1, 1, -1, 1, -1, 1, -1])


def _signal_with_band_energy(p, band, n=3):
    # unit spectrum with mass p inside the band, the rest outside
    coeffs = np.zeros(1 << n)
    inside = band.start
    outside = 0 if band.start > 0 else band.stop
    coeffs[inside] = math.sqrt(p)
    coeffs[outside] = math.sqrt(1.0 - p)
    return fwht_sequency(coeffs).coefficients


def _random_state(n, rng):
    from seqlab.statevector import StateVector

    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(n, amps / np.linalg.norm(amps))


def test_config_rejects_unknown_mode():
    with pytest.raises(InvalidSize):
        EstimationConfig(mode="oracle")


def test_config_rejects_bad_sampling_parameters():
    with pytest.raises(InvalidSize):
        EstimationConfig(mode="sampled", shots_per_round=0)
    with pytest.raises(InvalidSize):
        EstimationConfig(mode="mlqae", schedule=())
    with pytest.raises(InvalidSize):
        EstimationConfig(mode="mlqae", schedule=(0, -1))
    with pytest.raises(InvalidSize):
        EstimationConfig(mode="mlqae", grid_points=1)


def test_config_normalizes_schedule_to_tuple():
    config = EstimationConfig(mode="mlqae", schedule=[0, 1, 2])
    assert config.schedule == (0, 1, 2)


def test_exact_mode_binary_cases_are_exact():
    assert estimate(_DC, SequencyBand(0, 2)).p_est == 1.0
    assert estimate(_DC, SequencyBand(2, 3)).p_est == 0.0
    assert estimate(_ALTERNATING, SequencyBand(5, 3)).p_est == 1.0
    assert estimate(_ALTERNATING, SequencyBand(0, 4)).p_est == 0.0


def test_exact_mode_reports_no_sampling_metadata():
    result = estimate(_DC, SequencyBand(0, 2))
    assert result.mode == "exact"
    assert result.shots is None and result.schedule is None
    assert result.stderr_est == 0.0


@pytest.mark.parametrize("n", range(1, 9))
def test_exact_mode_matches_classical_band_energy(n):
    rng = np.random.default_rng(200 + n)
    size = 1 << n
    for _ in range(25):
        signal = rng.normal(size=size)
        a = int(rng.integers(0, size))
        m = int(rng.integers(1, size - a + 1))
        band = SequencyBand(a, m)
        spectrum = fwht_sequency(signal / np.linalg.norm(signal))
        expected = band_energy_classical(spectrum, band)
        assert abs(estimate(signal, band).p_est - expected) < 1e-12


@pytest.mark.parametrize("mode", ["exact", "sampled", "mlqae"])
def test_p_est_is_sine_squared_of_theta(mode):
    signal = _signal_with_band_energy(0.375, SequencyBand(2, 3))
    config = EstimationConfig(mode=mode, shots_per_round=200, rng_seed=9)
    result = estimate(signal, SequencyBand(2, 3), config)
    assert result.p_est == pytest.approx(math.sin(result.theta_est) ** 2, abs=1e-12)


def test_default_config_is_exact():
    result = estimate(_DC, SequencyBand(0, 2))
    assert result == estimate(_DC, SequencyBand(0, 2), EstimationConfig())


def test_prep_gate_loads_normalized_signal():
    rng = np.random.default_rng(31)
    layout = RegisterLayout(3)
    signal = rng.normal(size=8)
    state = apply_gate(zero_state(layout.total), state_prep_gate(signal, layout))
    expected = signal / np.linalg.norm(signal)
    assert np.allclose(state.amplitudes[:8], expected, atol=1e-12)
    assert np.all(state.amplitudes[8:] == 0)


def test_prep_gate_is_self_inverse():
    rng = np.random.default_rng(32)
    layout = RegisterLayout(3)
    op = state_prep_gate(rng.normal(size=8), layout)
    state = _random_state(layout.total, rng)
    back = apply_gate(apply_gate(state, op), op)
    assert np.allclose(back.amplitudes, state.amplitudes, atol=1e-10)


def test_prep_gate_for_basis_signal_is_identity():
    layout = RegisterLayout(2)
    op = state_prep_gate([1.0, 0, 0, 0], layout)
    state = _random_state(layout.total, np.random.default_rng(33))
    assert np.allclose(apply_gate(state, op).amplitudes, state.amplitudes, atol=1e-12)


def test_marking_circuit_flag_probability_equals_band_energy():
    rng = np.random.default_rng(34)
    signal = rng.normal(size=16)
    band = SequencyBand(3, 6)
    circuit, layout = marking_circuit(signal, band)
    state = apply_circuit(zero_state(layout.total), circuit)
    spectrum = fwht_sequency(signal / np.linalg.norm(signal))
    expected = band_energy_classical(spectrum, band)
    assert flag_probability(state, layout) == pytest.approx(expected, abs=1e-10)


def test_marked_state_agrees_with_marking_circuit():
    rng = np.random.default_rng(35)
    signal = rng.normal(size=8)
    band = SequencyBand(2, 3)
    state, layout = marked_state(signal, band)
    circuit, _ = marking_circuit(signal, band)
    via_prep = apply_circuit(zero_state(layout.total), circuit)
    assert np.allclose(state.amplitudes, via_prep.amplitudes, atol=1e-10)


def _grover_setup(signal, band):
    layout = RegisterLayout(int(np.log2(len(signal))))
    prep = Circuit(layout.total, (state_prep_gate(signal, layout),))
    oracle = build_band_oracle(layout.n_data, band, "semantic")
    grover = grover_operator(prep, oracle, layout)
    circuit_a, _ = marking_circuit(signal, band)
    state = apply_circuit(zero_state(layout.total), circuit_a)
    return grover, state, layout


def test_one_grover_round_saturates_quarter_probability():
    band = SequencyBand(2, 3)
    signal = _signal_with_band_energy(0.25, band)
    grover, state, layout = _grover_setup(signal, band)
    assert flag_probability(state, layout) == pytest.approx(0.25, abs=1e-12)
    rotated = apply_circuit(state, grover)
    # theta = pi/6, so one round lands on sin^2(3 theta) = 1
    assert flag_probability(rotated, layout) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("n,seed", [(2, 1), (3, 2), (4, 3)])
def test_grover_rotation_law_on_random_instances(n, seed):
    rng = np.random.default_rng(seed)
    size = 1 << n
    signal = rng.normal(size=size)
    band = SequencyBand(1, size // 2)
    grover, state, layout = _grover_setup(signal, band)
    theta = math.asin(math.sqrt(flag_probability(state, layout)))
    for rounds in range(1, 5):
        state = apply_circuit(state, grover)
        predicted = math.sin((2 * rounds + 1) * theta) ** 2
        assert flag_probability(state, layout) == pytest.approx(predicted, abs=1e-9)


@pytest.mark.parametrize(
    "p,tolerance", [(1.0, 1e-9), (0.0, 1e-12)], ids=["saturated", "empty"]
)
def test_grover_fixed_points(p, tolerance):
    band = SequencyBand(2, 3)
    signal = _signal_with_band_energy(p, band)
    grover, state, layout = _grover_setup(signal, band)
    for _ in range(3):
        state = apply_circuit(state, grover)
        assert flag_probability(state, layout) == pytest.approx(p, abs=tolerance)


def test_grover_operator_checks_layout():
    layout = RegisterLayout(3)
    small_prep = Circuit(4, (state_prep_gate(np.ones(8), RegisterLayout(1)),))
    oracle = build_band_oracle(3, SequencyBand(0, 2), "semantic")
    with pytest.raises(LayoutMismatch):
        grover_operator(small_prep, oracle, layout)


def test_sampled_mode_is_seeded_and_unbiased():
    signal = [1.0, 0, 0, 0, 0, 0, 0, 0]  # uniform sequency spectrum
    config = EstimationConfig(mode="sampled", shots_per_round=10_000, rng_seed=7)
    result = estimate(signal, SequencyBand(2, 3), config)
    again = estimate(signal, SequencyBand(2, 3), config)
    assert result == again
    assert result.mode == "sampled" and result.shots == 10_000
    assert result.schedule is None
    assert abs(result.p_est - 0.375) < 0.02
    expected_stderr = math.sqrt(result.p_est * (1 - result.p_est) / 10_000)
    assert result.stderr_est == pytest.approx(expected_stderr, abs=1e-15)


def test_mlqae_default_schedule_recovers_uniform_band_energy():
    signal = [1.0, 0, 0, 0, 0, 0, 0, 0]
    config = EstimationConfig(
        mode="mlqae", shots_per_round=DEFAULT_SHOTS, rng_seed=21
    )
    result = estimate(signal, SequencyBand(2, 3), config)
    assert result.schedule == DEFAULT_SCHEDULE
    assert result.shots == DEFAULT_SHOTS
    assert abs(result.p_est - 0.375) <= 0.02


@pytest.mark.parametrize("target", [0.1, 0.375, 0.8])
def test_mlqae_is_consistent_at_high_shot_count(target):
    band = SequencyBand(2, 3)
    signal = _signal_with_band_energy(target, band)
    config = EstimationConfig(
        mode="mlqae", shots_per_round=100_000, schedule=(0, 1, 2, 4), rng_seed=5
    )
    result = estimate(signal, band, config)
    assert abs(result.p_est - target) <= 0.005


def test_mlqae_deterministic_for_fixed_seed():
    signal = _signal_with_band_energy(0.3, SequencyBand(2, 3))
    config = EstimationConfig(mode="mlqae", shots_per_round=500, rng_seed=13)
    first = estimate(signal, SequencyBand(2, 3), config)
    second = estimate(signal, SequencyBand(2, 3), config)
    assert first == second


def test_mlqae_reports_finite_uncertainty():
    signal = _signal_with_band_energy(0.3, SequencyBand(2, 3))
    config = EstimationConfig(mode="mlqae", shots_per_round=500, rng_seed=13)
    result = estimate(signal, SequencyBand(2, 3), config)
    assert 0.0 <= result.stderr_est < 0.1
    assert math.isfinite(result.stderr_est)


@pytest.mark.parametrize("p", [0.0, 1.0])
def test_endpoints_are_safe_in_every_mode(p):
    band = SequencyBand(2, 3)
    signal = _signal_with_band_energy(p, band)
    exact = estimate(signal, band)
    assert exact.p_est == p
    mlqae = estimate(
        signal,
        band,
        EstimationConfig(mode="mlqae", shots_per_round=200, rng_seed=3),
    )
    assert not math.isnan(mlqae.p_est) and not math.isnan(mlqae.theta_est)
    assert mlqae.p_est == pytest.approx(p, abs=1e-6)
