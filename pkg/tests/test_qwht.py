import math

import numpy as np
import pytest

from oracles import SEQUENCY_SIGNS_8, natural_matrix, sequency_matrix
from seqlab import (
    BitString,
    apply_qwht,
    build_qwht,
    fwht_sequency,
    gate_census,
    init_from_signal,
    unitary_matrix,
    zero_crossings_gray,
)
from seqlab.circuits import Circuit, GateKind
from seqlab.errors import InvalidSize, SizeMismatch
from seqlab.qwht import natural_circuit
from seqlab.statevector import apply_circuit, basis_state


def test_single_qubit_circuit_is_one_hadamard():
    circuit = build_qwht(1)
    assert [op.kind for op in circuit.ops] == [GateKind.H]
    assert np.allclose(
        unitary_matrix(circuit), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15
    )


def test_layer_structure_for_four_qubits():
    ops = [(op.kind.value, op.qubits) for op in build_qwht(4).ops]
    assert ops == [
        ("H", (0,)),
        ("H", (1,)),
        ("H", (2,)),
        ("H", (3,)),
        ("CNOT", (0, 1)),
        ("CNOT", (1, 2)),
        ("CNOT", (2, 3)),
        ("SWAP", (0, 3)),
        ("SWAP", (1, 2)),
    ]


def test_order_eight_unitary_matches_transcribed_matrix():
    u = unitary_matrix(build_qwht(3))
    assert np.max(np.abs(u.imag)) < 1e-15
    assert np.max(np.abs(u.real - SEQUENCY_SIGNS_8 / math.sqrt(8))) < 1e-12


@pytest.mark.parametrize("n", range(1, 7))
def test_unitary_matches_entrywise_formula(n):
    u = unitary_matrix(build_qwht(n))
    assert np.max(np.abs(u - sequency_matrix(n))) < 1e-12


@pytest.mark.parametrize("n", range(1, 17))
def test_gate_census_formula(n):
    census = gate_census(build_qwht(n))
    assert census.get("H", 0) == n
    assert census.get("CNOT", 0) == n - 1
    assert census.get("SWAP", 0) == n // 2
    assert sum(census.values()) == n + (n - 1) + n // 2


def test_zero_state_maps_to_uniform_superposition():
    state = apply_qwht(init_from_signal([1.0, 0, 0, 0, 0, 0, 0, 0]))
    assert np.allclose(state.amplitudes, np.full(8, 1 / np.sqrt(8)), atol=1e-15)


def test_constant_signal_maps_to_zero_index():
    state = apply_qwht(init_from_signal(np.ones(8)))
    assert np.allclose(state.amplitudes, np.eye(8)[0], atol=1e-12)


def test_alternating_signal_maps_to_top_index():
    state = apply_qwht(init_from_signal([1.0, -1, 1, -1, 1, -1, 1, -1]))
    assert np.allclose(state.amplitudes, np.eye(8)[7], atol=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
def test_circuit_matches_classical_transform(n):
    rng = np.random.default_rng(100 + n)
    size = 1 << n
    for _ in range(200):
        signal = rng.normal(size=size)
        state = apply_qwht(init_from_signal(signal))
        expected = fwht_sequency(signal / np.linalg.norm(signal)).coefficients
        assert np.max(np.abs(state.amplitudes - expected)) < 1e-10


@pytest.mark.parametrize("n", range(1, 9))
def test_cascade_and_swap_permute_basis_by_crossing_count(n):
    # dropping the Hadamard layer leaves the pure index map |s> -> |Z_n(s)>
    permutation = Circuit(n, build_qwht(n).ops[n:])
    for s in range(1 << n):
        out = apply_circuit(basis_state(n, s), permutation)
        assert out.amplitudes[zero_crossings_gray(BitString(n, s))] == 1.0


def test_transform_is_self_inverse_on_states():
    rng = np.random.default_rng(55)
    signal = rng.normal(size=32)
    state = init_from_signal(signal)
    back = apply_qwht(apply_qwht(state))
    assert np.allclose(back.amplitudes, state.amplitudes, atol=1e-12)


def test_apply_rejects_mismatched_data_register():
    with pytest.raises(SizeMismatch):
        apply_qwht(init_from_signal(np.ones(8)), n_data=4)


def test_build_rejects_empty_register():
    with pytest.raises(InvalidSize):
        build_qwht(0)
    with pytest.raises(InvalidSize):
        natural_circuit(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_natural_circuit_matches_natural_matrix(n):
    u = unitary_matrix(natural_circuit(n))
    assert np.max(np.abs(u - natural_matrix(n))) < 1e-12
