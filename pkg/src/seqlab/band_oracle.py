"""Reversible band-membership oracle on the data register.

The oracle toggles the flag qubit exactly when the data register value v
satisfies start <= v < stop for a sequency band, leaving every other qubit
unchanged. Two interchangeable realizations:

* gate_level: two classical-reversible comparators (X/CNOT/TOFFOLI with a
  ripple carry chain) mark "v >= start" and "v < stop" on the temp qubits,
  a Toffoli conjoins them onto the flag, and the comparators run in
  reverse to restore temps and carries.
* semantic: one OPAQUE op applying the same basis permutation directly.

Both act on the full RegisterLayout register so they compose with state
preparation and amplitude amplification.
"""

from __future__ import annotations

import numpy as np

from .circuits import (
    Circuit,
    GateOp,
    RegisterLayout,
    cnot,
    opaque,
    toffoli,
    x,
)
from .errors import ConstantOutOfRange, InvalidSize, LayoutMismatch
from .statevector import StateVector
from .walsh import SequencyBand

REALIZATIONS = ("gate_level", "semantic")


def _carry_chain(n: int, constant: int, target: int, layout: RegisterLayout) -> list[GateOp]:
    """Ops computing carry-out of (value + ~constant + 1) onto `target`.

    Carry out is 1 exactly when value >= constant. Carries c_1..c_{n-1}
    ripple through the layout's ancillas and are uncomputed by the caller
    via the reversed compute list. Assumes 0 < constant < 2**n.
    """
    bits = [(constant >> i) & 1 for i in range(n)]
    carries = list(layout.carries)

    def step(i: int, out: int) -> list[GateOp]:
        # carry-in for i >= 1 lives in carries[i-1]
        prev = carries[i - 1]
        if bits[i]:
            # constant bit 1 -> complement bit 0 -> AND of data bit and carry
            return [toffoli(i, prev, out)]
        # complement bit 1 -> OR, built from Toffoli by De Morgan
        return [x(i), x(prev), toffoli(i, prev, out), x(out), x(i), x(prev)]

    if n == 1:
        # single bit, constant == 1: carry out is the data bit itself
        return [cnot(0, target)]

    compute: list[GateOp] = []
    if bits[0]:
        compute.append(cnot(0, carries[0]))  # carry-in is the +1; MAJ reduces to the bit
    else:
        compute.append(x(carries[0]))  # complement bit and carry-in force carry 1
    for i in range(1, n - 1):
        compute.extend(step(i, carries[i]))
    final = step(n - 1, target)
    return compute + final + [op.adjoint() for op in reversed(compute)]


def comparator_ge(n: int, constant: int, target: int | None = None) -> Circuit:
    """Circuit toggling a temp qubit iff the data register value >= constant.

    Degenerate bounds compile away: constant 0 is a bare X (always true)
    and constant 2**n is the empty circuit (never true).
    """
    if n < 1:
        raise InvalidSize(f"register size must be positive, got {n}")
    if not 0 <= constant <= (1 << n):
        raise ConstantOutOfRange(f"comparator constant {constant} outside [0, 2**{n}]")
    layout = RegisterLayout(n)
    if target is None:
        target = layout.temp1
    if constant == 0:
        return Circuit(layout.total, (x(target),))
    if constant == (1 << n):
        return Circuit(layout.total, ())
    return Circuit(layout.total, tuple(_carry_chain(n, constant, target, layout)))


def comparator_lt(n: int, constant: int, target: int | None = None) -> Circuit:
    """Circuit toggling a temp qubit iff the data register value < constant.

    Complement of comparator_ge: same network followed by an X on the
    target. Degenerate bounds compile away symmetrically.
    """
    if n < 1:
        raise InvalidSize(f"register size must be positive, got {n}")
    if not 0 <= constant <= (1 << n):
        raise ConstantOutOfRange(f"comparator constant {constant} outside [0, 2**{n}]")
    layout = RegisterLayout(n)
    if target is None:
        target = layout.temp2
    if constant == 0:
        return Circuit(layout.total, ())
    if constant == (1 << n):
        return Circuit(layout.total, (x(target),))
    ops = _carry_chain(n, constant, target, layout)
    ops.append(x(target))
    return Circuit(layout.total, tuple(ops))


def _semantic_oracle(n: int, band: SequencyBand, layout: RegisterLayout) -> GateOp:
    flag_bit = 1 << layout.flag
    data_mask = (1 << n) - 1

    def flip_flag(amps: np.ndarray) -> np.ndarray:
        idx = np.arange(amps.shape[0])
        data = idx & data_mask
        in_band = (data >= band.start) & (data < band.stop)
        perm = np.where(in_band, idx ^ flag_bit, idx)
        return amps[perm]

    qubits = tuple(layout.data) + (layout.flag,)
    label = f"band[{band.start},{band.stop})"
    # the permutation is an involution, so forward and inverse coincide
    return opaque(qubits, label, flip_flag, flip_flag)


def build_band_oracle(n: int, band: SequencyBand, realization: str = "gate_level") -> Circuit:
    """Oracle circuit toggling the flag for data values inside the band."""
    if n < 1:
        raise InvalidSize(f"register size must be positive, got {n}")
    band.validate(n)
    if realization not in REALIZATIONS:
        raise ValueError(f"unknown realization '{realization}'")
    layout = RegisterLayout(n)
    if realization == "semantic":
        return Circuit(layout.total, (_semantic_oracle(n, band, layout),))
    lower = comparator_ge(n, band.start, layout.temp1)
    upper = comparator_lt(n, band.stop, layout.temp2)
    ops: list[GateOp] = []
    ops.extend(lower.ops)
    ops.extend(upper.ops)
    ops.append(toffoli(layout.temp1, layout.temp2, layout.flag))
    # restore temps so the oracle touches nothing but the flag
    ops.extend(op.adjoint() for op in reversed(upper.ops))
    ops.extend(op.adjoint() for op in reversed(lower.ops))
    return Circuit(layout.total, tuple(ops))


def flag_probability(state: StateVector, layout: RegisterLayout) -> float:
    """Probability that measuring the flag qubit yields 1."""
    if state.n_qubits != layout.total:
        raise LayoutMismatch(
            f"state covers {state.n_qubits} qubits, layout expects {layout.total}"
        )
    probs = state.probabilities()
    idx = np.arange(probs.shape[0])
    return float(probs[(idx >> layout.flag) & 1 == 1].sum())
