"""Independent reference implementations and hand-transcribed fixtures.

Everything here is deliberately naive: per-entry sign formulas, O(N**2)
accumulation loops, and pure-python scans, written without importing the
package under test, so agreement is evidence rather than tautology.
"""

import math

import numpy as np

# The eight 3-bit words with their signed parity sequences and sign-change
# counts, transcribed by hand.
TABLE1 = (
    ("000", (1, 1, 1, 1, 1, 1, 1, 1), 0),
    ("001", (1, -1, 1, -1, 1, -1, 1, -1), 7),
    ("010", (1, 1, -1, -1, 1, 1, -1, -1), 3),
    ("011", (1, -1, -1, 1, 1, -1, -1, 1), 4),
    ("100", (1, 1, 1, 1, -1, -1, -1, -1), 1),
    ("101", (1, -1, 1, -1, -1, 1, -1, 1), 6),
    ("110", (1, 1, -1, -1, -1, -1, 1, 1), 2),
    ("111", (1, -1, -1, 1, -1, 1, 1, -1), 5),
)

# Order-8 sequency-ordered transform matrix times sqrt(8): row k has
# exactly k sign changes. Transcribed by hand.
SEQUENCY_SIGNS_8 = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, -1, 1, -1, 1, -1, 1, -1],
    ],
    dtype=np.float64,
)


def popcount(x: int) -> int:
    return bin(x).count("1")


def natural_matrix(n: int) -> np.ndarray:
    """Order-2**n natural Hadamard matrix from the parity of j AND k."""
    size = 1 << n
    out = np.empty((size, size))
    for j in range(size):
        for k in range(size):
            out[j, k] = (-1.0) ** popcount(j & k)
    return out / math.sqrt(size)


def sequency_matrix(n: int) -> np.ndarray:
    """Sequency-ordered matrix from the per-entry bit-product exponent.

    Entry (k, j) has sign (-1)**sum_r k_{n-1-r} * (j_r xor j_{r+1}),
    with j_n taken as 0.
    """
    size = 1 << n
    out = np.empty((size, size))
    for k in range(size):
        for j in range(size):
            exponent = 0
            for r in range(n):
                k_bit = (k >> (n - 1 - r)) & 1
                j_bit = (j >> r) & 1
                j_next = (j >> (r + 1)) & 1 if r + 1 < n else 0
                exponent += k_bit * (j_bit ^ j_next)
            out[k, j] = (-1.0) ** exponent
    return out / math.sqrt(size)


def naive_transform(signal, matrix: np.ndarray) -> np.ndarray:
    """O(N**2) transform: explicit row-by-row accumulation."""
    values = np.asarray(signal, dtype=np.float64)
    out = np.zeros(values.shape[0])
    for row in range(matrix.shape[0]):
        acc = 0.0
        for col in range(matrix.shape[1]):
            acc += matrix[row, col] * values[col]
        out[row] = acc
    return out


def brute_zero_crossings(n: int, s: int) -> int:
    """Sign changes of (-1)**popcount(s AND k), k ascending, by full scan."""
    signs = [(-1) ** popcount(s & k) for k in range(1 << n)]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def brute_band_energy(signal, start: int, width: int) -> float:
    """Band energy from the naive sequency transform of the unit signal."""
    values = np.asarray(signal, dtype=np.float64)
    values = values / np.linalg.norm(values)
    n = values.shape[0].bit_length() - 1
    spectrum = naive_transform(values, sequency_matrix(n))
    return float(np.sum(spectrum[start : start + width] ** 2))
