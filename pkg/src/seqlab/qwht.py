"""Sequency-ordered Walsh-Hadamard transform as a quantum circuit.

Three fixed layers: a Hadamard on every qubit, an ascending CNOT cascade
(control k, target k+1) that turns each basis label into its running
prefix XOR, and a qubit-reversal SWAP layer. The composite equals the
orthonormal sequency-ordered transform matrix; gate count is n Hadamards,
n-1 CNOTs and floor(n/2) SWAPs.
"""

from __future__ import annotations

from .circuits import Circuit, GateOp, cnot, h, swap
from .errors import InvalidSize, SizeMismatch
from .statevector import StateVector, apply_circuit


def _hadamard_layer(n: int) -> tuple[GateOp, ...]:
    return tuple(h(q) for q in range(n))


def natural_circuit(n: int) -> Circuit:
    """Plain H on every qubit: the natural-order transform."""
    if n < 1:
        raise InvalidSize(f"register size must be positive, got {n}")
    return Circuit(n, _hadamard_layer(n))


def build_qwht(n: int) -> Circuit:
    """Sequency-ordered transform circuit on an n-qubit data register."""
    if n < 1:
        raise InvalidSize(f"register size must be positive, got {n}")
    ops = list(_hadamard_layer(n))
    ops.extend(cnot(k, k + 1) for k in range(n - 1))
    ops.extend(swap(k, n - 1 - k) for k in range(n // 2))
    return Circuit(n, tuple(ops))


def apply_qwht(state: StateVector, n_data: int | None = None) -> StateVector:
    """Apply the sequency transform to a state covering exactly the data register."""
    if n_data is not None and n_data != state.n_qubits:
        raise SizeMismatch(
            f"state covers {state.n_qubits} qubits, expected data register of {n_data}"
        )
    return apply_circuit(state, build_qwht(state.n_qubits))
