"""Minimal gate-level circuit representation.

The gate set is H, X, CNOT, SWAP, TOFFOLI plus OPAQUE nodes that carry a
pair of statevector transformers (forward and inverse). Circuits are
immutable; composition produces new objects.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import (
    DuplicateQubit,
    InvalidSize,
    OpaqueNotMaterializable,
    QubitOutOfRange,
    SizeMismatch,
    TooLarge,
)

MAX_DENSE_QUBITS = 10

Transformer = Callable[[np.ndarray], np.ndarray]


class GateKind(Enum):
    H = "H"
    X = "X"
    CNOT = "CNOT"
    SWAP = "SWAP"
    TOFFOLI = "TOFFOLI"
    OPAQUE = "OPAQUE"


_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.CNOT: 2,
    GateKind.SWAP: 2,
    GateKind.TOFFOLI: 3,
}


@dataclass(frozen=True)
class GateOp:
    """One circuit operation acting on the named qubits.

    For OPAQUE ops, `forward` and `inverse` transform a full statevector
    amplitude array; they must be exact mutual inverses.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    label: str = ""
    forward: Transformer | None = field(default=None, compare=False)
    inverse: Transformer | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind is GateKind.OPAQUE:
            if not self.qubits:
                raise InvalidSize("OPAQUE op must name at least one qubit")
            if self.forward is None or self.inverse is None:
                raise InvalidSize("OPAQUE op needs forward and inverse transformers")
        else:
            expected = _ARITY[self.kind]
            if len(self.qubits) != expected:
                raise InvalidSize(
                    f"{self.kind.value} takes {expected} qubit(s), got {len(self.qubits)}"
                )
        for q in self.qubits:
            if q < 0:
                raise QubitOutOfRange(f"negative qubit index {q}")
        if len(set(self.qubits)) != len(self.qubits):
            raise DuplicateQubit(f"repeated qubit in {self.kind.value} {self.qubits}")

    def adjoint(self) -> "GateOp":
        """Inverse op. The named gates are involutions; OPAQUE swaps transformers."""
        if self.kind is GateKind.OPAQUE:
            return GateOp(self.kind, self.qubits, self.label, self.inverse, self.forward)
        return self


def h(q: int) -> GateOp:
    return GateOp(GateKind.H, (q,))


def x(q: int) -> GateOp:
    return GateOp(GateKind.X, (q,))


def cnot(control: int, target: int) -> GateOp:
    return GateOp(GateKind.CNOT, (control, target))


def swap(a: int, b: int) -> GateOp:
    return GateOp(GateKind.SWAP, (a, b))


def toffoli(control_a: int, control_b: int, target: int) -> GateOp:
    return GateOp(GateKind.TOFFOLI, (control_a, control_b, target))


def opaque(qubits: tuple[int, ...], label: str, forward: Transformer,
           inverse: Transformer) -> GateOp:
    return GateOp(GateKind.OPAQUE, tuple(qubits), label, forward, inverse)


@dataclass(frozen=True)
class Circuit:
    """Immutable op list over a register of n_qubits."""

    n_qubits: int
    ops: tuple[GateOp, ...] = ()

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise InvalidSize(f"register needs at least 1 qubit, got {self.n_qubits}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            for q in op.qubits:
                if q >= self.n_qubits:
                    raise QubitOutOfRange(
                        f"{op.kind.value} touches qubit {q} on a {self.n_qubits}-qubit register"
                    )


def adjoint(circuit: Circuit) -> Circuit:
    """Circuit implementing the inverse unitary."""
    return Circuit(circuit.n_qubits, tuple(op.adjoint() for op in reversed(circuit.ops)))


def concat(*circuits: Circuit) -> Circuit:
    """Sequential composition; all parts must share the register size."""
    if not circuits:
        raise InvalidSize("concat needs at least one circuit")
    n = circuits[0].n_qubits
    ops: list[GateOp] = []
    for c in circuits:
        if c.n_qubits != n:
            raise SizeMismatch(f"cannot concat registers of {n} and {c.n_qubits} qubits")
        ops.extend(c.ops)
    return Circuit(n, tuple(ops))


def embed(circuit: Circuit, n_total: int) -> Circuit:
    """Re-host a circuit on a larger register; qubit indices are unchanged."""
    if n_total < circuit.n_qubits:
        raise SizeMismatch(
            f"cannot embed {circuit.n_qubits}-qubit circuit into {n_total} qubits"
        )
    return Circuit(n_total, circuit.ops)


def gate_census(circuit: Circuit) -> dict[str, int]:
    """Count of ops by gate kind name."""
    return dict(Counter(op.kind.value for op in circuit.ops))


def unitary_matrix(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit, columns indexed by input basis state.

    Only available for OPAQUE-free circuits on at most MAX_DENSE_QUBITS
    qubits; larger requests refuse rather than thrash.
    """
    if circuit.n_qubits > MAX_DENSE_QUBITS:
        raise TooLarge(
            f"dense matrix limited to {MAX_DENSE_QUBITS} qubits, got {circuit.n_qubits}"
        )
    for op in circuit.ops:
        if op.kind is GateKind.OPAQUE:
            raise OpaqueNotMaterializable(f"circuit contains OPAQUE op '{op.label}'")
    from .statevector import apply_op_array

    u = np.eye(1 << circuit.n_qubits, dtype=np.complex128)
    for op in circuit.ops:
        u = apply_op_array(u, op)
    return u


def to_text(circuit: Circuit) -> str:
    """Debug dump, one op per line: KIND q0 q1 ..."""
    lines = []
    for op in circuit.ops:
        kind = op.kind.value
        if op.kind is GateKind.OPAQUE and op.label:
            kind = f"OPAQUE[{op.label}]"
        lines.append(" ".join([kind, *map(str, op.qubits)]))
    return "\n".join(lines)


@dataclass(frozen=True)
class RegisterLayout:
    """Qubit assignment for the band-marking pipeline.

    Data occupies the low indices so a data-register basis value equals the
    low bits of the full-register index. One flag qubit, two comparator
    temporaries, and n_data - 1 carry ancillas follow.
    """

    n_data: int

    def __post_init__(self) -> None:
        if self.n_data < 1:
            raise InvalidSize(f"data register needs at least 1 qubit, got {self.n_data}")

    @property
    def data(self) -> range:
        return range(self.n_data)

    @property
    def flag(self) -> int:
        return self.n_data

    @property
    def temp1(self) -> int:
        return self.n_data + 1

    @property
    def temp2(self) -> int:
        return self.n_data + 2

    @property
    def carries(self) -> range:
        return range(self.n_data + 3, 2 * self.n_data + 2)

    @property
    def total(self) -> int:
        return 2 * self.n_data + 2
