"""Dense statevector simulation with little-endian qubit order.

Bit k of a basis index is the state of qubit k. Gates act by index
arithmetic on the amplitude array; no 2**n x 2**n gate matrices are ever
formed. All public operations are pure: inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuits import Circuit, GateKind, GateOp
from .errors import (
    IndexOutOfRange,
    InvalidSize,
    NotPowerOfTwo,
    QubitOutOfRange,
    SizeMismatch,
    ZeroVector,
)

_INV_SQRT2 = 1.0 / np.sqrt(2.0)
_NORM_ATOL = 1e-9

RNG_ID = "numpy-default_rng-pcg64"


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitude array over 2**n_qubits basis states."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise InvalidSize(f"state needs at least 1 qubit, got {self.n_qubits}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n_qubits,):
            raise SizeMismatch(
                f"expected {1 << self.n_qubits} amplitudes, got shape {amps.shape}"
            )
        norm_sq = float(np.sum(amps.real**2 + amps.imag**2))
        if abs(norm_sq - 1.0) > _NORM_ATOL:
            raise ZeroVector(f"amplitudes have squared norm {norm_sq}, expected 1")
        object.__setattr__(self, "amplitudes", amps)

    def probabilities(self) -> np.ndarray:
        a = self.amplitudes
        return a.real**2 + a.imag**2


def zero_state(n_qubits: int) -> StateVector:
    """|0...0> on n_qubits."""
    if n_qubits < 1:
        raise InvalidSize(f"state needs at least 1 qubit, got {n_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n_qubits, amps)


def basis_state(n_qubits: int, index: int) -> StateVector:
    """Computational basis state |index>."""
    if n_qubits < 1:
        raise InvalidSize(f"state needs at least 1 qubit, got {n_qubits}")
    if not 0 <= index < (1 << n_qubits):
        raise IndexOutOfRange(f"basis index {index} outside register of {n_qubits} qubits")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def init_from_signal(signal) -> StateVector:
    """Normalize a real signal of length 2**n into a data-register state."""
    values = np.asarray(signal, dtype=np.float64)
    if values.ndim != 1:
        raise SizeMismatch(f"signal must be one-dimensional, got shape {values.shape}")
    n_samples = values.shape[0]
    if n_samples < 2 or n_samples & (n_samples - 1):
        raise NotPowerOfTwo(f"signal length {n_samples} is not 2**n with n >= 1")
    norm = float(np.linalg.norm(values))
    if norm == 0.0:
        raise ZeroVector("signal has no energy")
    n_qubits = n_samples.bit_length() - 1
    return StateVector(n_qubits, (values / norm).astype(np.complex128))


def extend_with_ancillas(state: StateVector, n_total: int) -> StateVector:
    """Tensor |0> ancillas above the existing qubits."""
    if n_total < state.n_qubits:
        raise SizeMismatch(
            f"cannot shrink a {state.n_qubits}-qubit state to {n_total} qubits"
        )
    if n_total == state.n_qubits:
        return state
    amps = np.zeros(1 << n_total, dtype=np.complex128)
    amps[: 1 << state.n_qubits] = state.amplitudes
    return StateVector(n_total, amps)


@lru_cache(maxsize=512)
def _gate_indices(n_amps: int, kind: GateKind, qubits: tuple[int, ...]):
    """Index pairs (src, dst) the gate mixes or permutes. Cached per pattern."""
    idx = np.arange(n_amps)
    if kind in (GateKind.H, GateKind.X):
        (q,) = qubits
        src = idx[(idx >> q) & 1 == 0]
        return src, src | (1 << q)
    if kind is GateKind.CNOT:
        control, target = qubits
        sel = ((idx >> control) & 1 == 1) & ((idx >> target) & 1 == 0)
        src = idx[sel]
        return src, src | (1 << target)
    if kind is GateKind.SWAP:
        a, b = qubits
        sel = ((idx >> a) & 1 == 1) & ((idx >> b) & 1 == 0)
        src = idx[sel]
        return src, src ^ ((1 << a) | (1 << b))
    if kind is GateKind.TOFFOLI:
        ca, cb, target = qubits
        sel = ((idx >> ca) & 1 == 1) & ((idx >> cb) & 1 == 1) & ((idx >> target) & 1 == 0)
        src = idx[sel]
        return src, src | (1 << target)
    raise AssertionError(f"no index plan for {kind}")


def apply_op_array(amps: np.ndarray, op: GateOp) -> np.ndarray:
    """Apply one op to an amplitude array (axis 0 is the basis index).

    Mutates and returns `amps` for the named gates; OPAQUE ops may return a
    fresh array. Linear in the array contents by construction.
    """
    if op.kind is GateKind.OPAQUE:
        out = op.forward(amps)
        if out.shape != amps.shape:
            raise SizeMismatch(
                f"OPAQUE '{op.label}' changed shape {amps.shape} -> {out.shape}"
            )
        return out
    src, dst = _gate_indices(amps.shape[0], op.kind, op.qubits)
    if op.kind is GateKind.H:
        lo = amps[src]
        hi = amps[dst]
        amps[src] = (lo + hi) * _INV_SQRT2
        amps[dst] = (lo - hi) * _INV_SQRT2
    else:
        moved = amps[src]
        amps[src] = amps[dst]
        amps[dst] = moved
    return amps


def _check_qubits(op: GateOp, n_qubits: int) -> None:
    for q in op.qubits:
        if q >= n_qubits:
            raise QubitOutOfRange(
                f"{op.kind.value} touches qubit {q} on a {n_qubits}-qubit register"
            )


def apply_gate(state: StateVector, op: GateOp) -> StateVector:
    """New state with one gate applied."""
    _check_qubits(op, state.n_qubits)
    amps = apply_op_array(state.amplitudes.copy(), op)
    return StateVector(state.n_qubits, amps)


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """New state with every op of the circuit applied in order."""
    if circuit.n_qubits != state.n_qubits:
        raise SizeMismatch(
            f"circuit on {circuit.n_qubits} qubits applied to {state.n_qubits}-qubit state"
        )
    amps = state.amplitudes.copy()
    for op in circuit.ops:
        amps = apply_op_array(amps, op)
    return StateVector(state.n_qubits, amps)


def probability_of(state: StateVector, predicate) -> float:
    """Total probability of basis indices satisfying `predicate(index)`."""
    probs = state.probabilities()
    keep = np.fromiter(
        (bool(predicate(j)) for j in range(probs.shape[0])), bool, probs.shape[0]
    )
    return float(probs[keep].sum())


def sample_measurement(state: StateVector, shots: int, rng_seed: int | None = None) -> dict[int, int]:
    """Histogram of `shots` i.i.d. basis-index draws from |amplitudes|**2.

    Sampling uses numpy's default_rng (PCG64); a fixed seed fixes the draw.
    """
    if shots < 1:
        raise InvalidSize(f"shots must be positive, got {shots}")
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(rng_seed)
    outcomes = rng.choice(probs.shape[0], size=shots, p=probs)
    values, counts = np.unique(outcomes, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}
