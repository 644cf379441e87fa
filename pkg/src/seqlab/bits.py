"""Word-level bit manipulations shared by the ordering and counting code.

All functions treat integers as n-bit words with bit 0 the least
significant. They are pure and allocation-free.
"""

from __future__ import annotations

import numpy as np


def mask(n: int) -> int:
    """All-ones word of width n."""
    return (1 << n) - 1


def bit(x: int, j: int) -> int:
    """Bit j of x."""
    return (x >> j) & 1


def binary_to_gray(x: int) -> int:
    """Reflected Gray code of x."""
    return x ^ (x >> 1)


def gray_to_binary(g: int) -> int:
    """Inverse of binary_to_gray."""
    b = g
    shift = 1
    while (g >> shift) != 0:
        b ^= g >> shift
        shift += 1
    return b


def bit_reverse(x: int, n: int) -> int:
    """x with its n low bits written in reverse order."""
    r = 0
    for _ in range(n):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


def prefix_xor(x: int, n: int) -> int:
    """Word whose bit m is the XOR of bits 0..m of x.

    Doubling-shift trick: O(log n) word operations.
    """
    t = x
    shift = 1
    while shift < n:
        t ^= t << shift
        shift <<= 1
    return t & mask(n)


def parity_u64(v: np.ndarray) -> np.ndarray:
    """Elementwise bit parity of an integer array (up to 64-bit words)."""
    v = v.copy()
    v ^= v >> 32
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1
