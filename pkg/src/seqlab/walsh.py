"""Classical Walsh-Hadamard analysis in natural and sequency order.

Normalization: every transform here carries the 1/sqrt(N) factor, so both
orderings are orthonormal involutions (applying the same transform twice
returns the input). Energy is preserved exactly in exact arithmetic.

Sequency order sorts the Walsh basis by zero-crossing count; row k of the
sequency matrix is row bit_reverse(gray(k)) of the natural (Hadamard)
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import binary_to_gray, bit_reverse
from .errors import BandOutOfRange, IndexOutOfRange, NotPowerOfTwo

ORDERINGS = ("natural", "sequency")


@dataclass(frozen=True)
class WalshSpectrum:
    """Transform coefficients plus the ordering they are indexed in."""

    ordering: str
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        if self.ordering not in ORDERINGS:
            raise IndexOutOfRange(f"unknown ordering '{self.ordering}'")
        coeffs = np.asarray(self.coefficients, dtype=np.float64)
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self) -> int:
        return int(self.coefficients.shape[0])


@dataclass(frozen=True)
class SequencyBand:
    """Half-open index window [start, start + width) in sequency order."""

    start: int
    width: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.width < 1:
            raise BandOutOfRange(f"band [{self.start}, {self.start + self.width}) is empty or negative")

    @property
    def stop(self) -> int:
        return self.start + self.width

    def validate(self, n_qubits: int) -> None:
        if self.stop > (1 << n_qubits):
            raise BandOutOfRange(
                f"band [{self.start}, {self.stop}) exceeds 2**{n_qubits} sequencies"
            )


def _checked_length(signal: np.ndarray) -> int:
    n_samples = signal.shape[0]
    if n_samples < 2 or n_samples & (n_samples - 1):
        raise NotPowerOfTwo(f"signal length {n_samples} is not 2**n with n >= 1")
    return n_samples


def fwht_natural(signal) -> WalshSpectrum:
    """Fast Walsh-Hadamard transform in natural (Hadamard) order.

    Butterfly recursion, O(N log N); includes the 1/sqrt(N) factor.
    """
    values = np.array(signal, dtype=np.float64)
    n_samples = _checked_length(values)
    stride = 1
    while stride < n_samples:
        pairs = values.reshape(-1, 2, stride)
        lo = pairs[:, 0, :].copy()
        hi = pairs[:, 1, :]
        pairs[:, 0, :] = lo + hi
        pairs[:, 1, :] = lo - hi
        values = pairs.reshape(n_samples)
        stride *= 2
    values *= 1.0 / np.sqrt(n_samples)
    return WalshSpectrum("natural", values)


def sequency_to_natural(k: int, n: int) -> int:
    """Natural row index holding the k-th sequency row: bit-reversed Gray code."""
    if n < 1:
        raise IndexOutOfRange(f"register size must be positive, got {n}")
    if not 0 <= k < (1 << n):
        raise IndexOutOfRange(f"sequency index {k} outside [0, 2**{n})")
    return bit_reverse(binary_to_gray(k), n)


@lru_cache(maxsize=64)
def _sequency_permutation(n: int) -> np.ndarray:
    return np.array([sequency_to_natural(k, n) for k in range(1 << n)])


def fwht_sequency(signal) -> WalshSpectrum:
    """Sequency-ordered transform: natural transform, rows re-sorted by
    zero-crossing count."""
    natural = fwht_natural(signal)
    n = len(natural).bit_length() - 1
    coeffs = natural.coefficients[_sequency_permutation(n)]
    return WalshSpectrum("sequency", coeffs)


def band_energy_classical(spectrum: WalshSpectrum, band: SequencyBand) -> float:
    """Sum of squared coefficients over the band's index window."""
    n_coeffs = len(spectrum)
    if band.stop > n_coeffs:
        raise BandOutOfRange(
            f"band [{band.start}, {band.stop}) exceeds spectrum of length {n_coeffs}"
        )
    window = spectrum.coefficients[band.start : band.stop]
    return float(np.sum(window * window))


@lru_cache(maxsize=None)
def _walsh(k: int, x: float) -> int:
    if x < 0.0 or x > 1.0:
        return 0
    if k == 0:
        return 1
    half, odd = divmod(k, 2)
    left = _walsh(half, 2.0 * x)
    right = _walsh(half, 2.0 * x - 1.0)
    sign = -1 if half & 1 else 1
    return left - sign * right if odd else left + sign * right


def walsh_function(k: int, x: float) -> int:
    """Walsh function of sequency k on [0, 1], dyadic split recursion.

    W_0 = 1 on [0,1]; W_2k(x) = W_k(2x) + (-1)^k W_k(2x-1) and
    W_2k+1(x) = W_k(2x) - (-1)^k W_k(2x-1). Zero outside [0,1].
    Sampling at the N midpoints (i + 0.5)/N never hits a dyadic
    discontinuity, so values are exactly +-1 there.
    """
    if k < 0:
        raise IndexOutOfRange(f"sequency index must be nonnegative, got {k}")
    return _walsh(k, float(x))
