"""Zero-crossing counts of signed parity sequences.

For an n-bit word s, the sequence F(k) = (-1)^{popcount(s & k)} over
k = 0..2**n-1 is a row of the natural Hadamard matrix. Its number of sign
changes is the sequency of that row, computable three ways: by scanning
the sequence, by an O(log n) closed form on the bits of s, and by a
recursion over truncations of s. All three must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bits import bit_reverse, parity_u64, prefix_xor
from .errors import IndexOutOfRange, InvalidSize


@dataclass(frozen=True)
class BitString:
    """An n-bit word; bit 0 is least significant."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSize(f"bit width must be positive, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise IndexOutOfRange(f"value {self.value} does not fit in {self.n} bits")

    def bit(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexOutOfRange(f"bit index {j} outside width {self.n}")
        return (self.value >> j) & 1

    def truncate(self, m: int) -> "BitString":
        """Low m bits as a shorter word."""
        if not 1 <= m <= self.n:
            raise InvalidSize(f"cannot truncate width {self.n} to {m}")
        return BitString(m, self.value & ((1 << m) - 1))

    def parity(self) -> int:
        return bin(self.value).count("1") & 1


def sequence_of(s: BitString) -> np.ndarray:
    """Signed sequence F(k) = (-1)^{popcount(s & k)}, int8 of length 2**n."""
    k = np.arange(1 << s.n, dtype=np.int64)
    parity = parity_u64(k & np.int64(s.value))
    return (1 - 2 * parity).astype(np.int8)


def zero_crossings_direct(s: BitString) -> int:
    """Count sign changes by scanning the full sequence. O(2**n)."""
    seq = sequence_of(s)
    return int(np.count_nonzero(seq[1:] != seq[:-1]))


def zero_crossings_gray(s: BitString) -> int:
    """Closed form: the count's bit k is the XOR of bits 0..n-1-k of s.

    Equivalently, bit-reverse the running prefix XOR of s. Word-level
    shifts only; no sequence is materialized.
    """
    return bit_reverse(prefix_xor(s.value, s.n), s.n)


def zero_crossings_recursive(s: BitString) -> int:
    """Recursion over truncations: Z(s|_m) = 2 Z(s|_{m-1}) + parity(s|_m)."""
    count = s.truncate(1).value
    for m in range(2, s.n + 1):
        count = 2 * count + s.truncate(m).parity()
    return count
