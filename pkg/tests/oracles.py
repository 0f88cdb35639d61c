"""Brute-force reference implementations, deliberately naive and independent
of the package code paths they check."""

import itertools


def standardize(seq):
    return tuple(sum(1 for y in seq if y <= x) for x in seq)


def brute_census(sigma):
    """Per-length distinct-pattern counts via combinations and a set of tuples."""
    n = len(sigma)
    out = []
    for k in range(1, n + 1):
        out.append(len({standardize(c) for c in itertools.combinations(sigma, k)}))
    return out


def brute_pattern_set(sigma):
    n = len(sigma)
    return {standardize(c) for k in range(1, n + 1) for c in itertools.combinations(sigma, k)}


def brute_h(n):
    return max(len(brute_pattern_set(p)) for p in itertools.permutations(range(1, n + 1)))


def brute_no_zero_lines(p, q):
    count = 0
    for cells in itertools.product((0, 1), repeat=p * q):
        rows = [cells[i * q:(i + 1) * q] for i in range(p)]
        if all(any(r) for r in rows) and all(any(r[j] for r in rows) for j in range(q)):
            count += 1
    return count


def literal_even_square(k):
    """s, s-1, ..., s-2k+1 with s = 2k, 4k, ..., 4k^2."""
    s = [2 * k * j for j in range(1, 2 * k + 1)]
    return tuple(x - i for i in range(2 * k) for x in s)


def corner_ample_cells(cells, R, C):
    """Ampleness straight from grid coordinates: cells is a set of (col, band)."""
    rb, cl = R // 2, C // 2
    for bands in (range(1, rb + 1), range(rb + 1, R + 1)):
        for cols in (range(1, cl + 1), range(cl + 1, C + 1)):
            if any(not any((c, b) in cells for c in cols) for b in bands):
                return False
            if any(not any((c, b) in cells for b in bands) for c in cols):
                return False
    return True


def brute_ample_count(R, C):
    grid = [(c, b) for c in range(1, C + 1) for b in range(1, R + 1)]
    return sum(
        corner_ample_cells({pt for pt, keep in zip(grid, pick) if keep}, R, C)
        for pick in itertools.product((0, 1), repeat=R * C)
    )


def fib(n):
    seq = [0, 1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[n]


def corner_lines(R, C):
    """Every corner row and corner column as a list of (col, band) cells."""
    rb, cl = R // 2, C // 2
    lines = []
    for bands in (range(1, rb + 1), range(rb + 1, R + 1)):
        for cols in (range(1, cl + 1), range(cl + 1, C + 1)):
            lines += [[(c, b) for c in cols] for b in bands]
            lines += [[(c, b) for b in bands] for c in cols]
    return lines


def ample_filter(cell_of_bit, R, C, nbits):
    """Boolean array over all 2^nbits masks: is the subset ample?

    cell_of_bit[i] is the (col, band) cell of bit i, or None for cells
    outside the main grid.
    """
    import numpy as np

    bit_of = {cell: i for i, cell in enumerate(cell_of_bit) if cell is not None}
    masks = np.arange(1 << nbits, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    for line in corner_lines(R, C):
        lm = 0
        for cell in line:
            lm |= 1 << bit_of[cell]
        ok &= (masks & lm) != 0
    return ok


def brute_ample_count_np(R, C):
    cells = [(c, b) for c in range(1, C + 1) for b in range(1, R + 1)]
    return int(ample_filter(cells, R, C, R * C).sum())
