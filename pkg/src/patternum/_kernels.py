"""Compiled inner loops for pattern enumeration.

A pattern of length k is packed exactly (no hashing): rank ``r`` of its
j-th entry (0-based rank, so it fits in 5 bits for k <= 32) occupies bits
``5*(j % 12)`` .. of word ``j // 12``.  Keys are only compared within one
length, so zero padding cannot cause a collision.
"""

import numpy as np
from numba import njit

BITS = 5
FIELDS_PER_WORD = 12
SMALL_MAX = 12  # packed ranks plus a 4-bit length tag fit one word


def words_for(length: int) -> int:
    return max(1, -(-length // FIELDS_PER_WORD))


@njit(nogil=True, cache=True)
def block_keys(perm0, inv0, hi, low_bits, offsets, out):
    """Keys of every subset whose mask has high part ``hi``.

    ``offsets[k]`` is the first output row for patterns of length k; rows of
    one length are contiguous.  The empty subset is skipped.
    """
    n = perm0.size
    cursor = offsets.copy()
    rank = np.empty(n, np.int64)
    words = out.shape[1]
    base = hi << low_bits
    for low in range(1 << low_bits):
        mask = base | low
        if mask == 0:
            continue
        r = 0
        for v in range(n):
            p = inv0[v]
            if (mask >> p) & 1:
                rank[p] = r
                r += 1
        row = cursor[r]
        cursor[r] += 1
        w = 0
        shift = 0
        acc = np.uint64(0)
        for p in range(n):
            if (mask >> p) & 1:
                acc |= np.uint64(rank[p]) << np.uint64(shift)
                shift += 5
                if shift == 60:
                    out[row, w] = acc
                    w += 1
                    acc = np.uint64(0)
                    shift = 0
        if shift:
            out[row, w] = acc
            w += 1
        while w < words:
            out[row, w] = np.uint64(0)
            w += 1


@njit(nogil=True, cache=True)
def small_census(perm0, inv0):
    """Distinct-pattern counts by length for n <= SMALL_MAX, in one pass."""
    n = perm0.size
    total = (1 << n) - 1
    keys = np.empty(total, np.uint64)
    rank = np.empty(n, np.int64)
    for mask in range(1, 1 << n):
        r = 0
        for v in range(n):
            p = inv0[v]
            if (mask >> p) & 1:
                rank[p] = r
                r += 1
        acc = np.uint64(r) << np.uint64(60)
        shift = 0
        for p in range(n):
            if (mask >> p) & 1:
                acc |= np.uint64(rank[p]) << np.uint64(shift)
                shift += 5
        keys[mask - 1] = acc
    keys.sort()
    counts = np.zeros(n + 1, np.int64)
    for i in range(total):
        if i == 0 or keys[i] != keys[i - 1]:
            counts[np.int64(keys[i] >> np.uint64(60))] += 1
    return counts
