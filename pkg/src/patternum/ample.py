"""Ample subsets of the grid and their exact count.

A subset X of the positions of pi_n is ample when, in each of the four
corner blocks of the main grid, every row and every column contains a cell
of X.  Extra cells never affect ampleness.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .construction import GridSpec, Kind, grid_points, position_of
from .perm import IndexSetLike, positions_of, positions_to_mask


@dataclass(frozen=True)
class Corner:
    name: str
    bands: range
    cols: range

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.bands), len(self.cols)


def corners(g: GridSpec) -> tuple[Corner, Corner, Corner, Corner]:
    """Bottom-left, bottom-right, top-left, top-right corner blocks."""
    bottom = range(1, g.bottom_rows + 1)
    top = range(g.bottom_rows + 1, g.rows + 1)
    left = range(1, g.left_cols + 1)
    right = range(g.left_cols + 1, g.cols + 1)
    return (
        Corner("bottom-left", bottom, left),
        Corner("bottom-right", bottom, right),
        Corner("top-left", top, left),
        Corner("top-right", top, right),
    )


def count_no_zero_lines(p: int, q: int) -> int:
    """Number of p x q 0-1 matrices with no zero row and no zero column.

    Inclusion-exclusion over the set of rows forced to be zero.
    """
    return sum((-1) ** i * comb(p, i) * (2 ** (p - i) - 1) ** q for i in range(p + 1))


def ample_count(g: GridSpec) -> int:
    """Exact number of ample subsets of the main grid (extras excluded)."""
    total = 1
    for corner in corners(g):
        total *= count_no_zero_lines(*corner.shape)
    return total


@lru_cache(maxsize=None)
def _line_masks(g: GridSpec) -> tuple[int, ...]:
    masks = []
    for corner in corners(g):
        for band in corner.bands:
            masks.append(positions_to_mask(position_of(g, col, band) for col in corner.cols))
        for col in corner.cols:
            masks.append(positions_to_mask(position_of(g, col, band) for band in corner.bands))
    return tuple(masks)


def is_ample(g: GridSpec, X: IndexSetLike) -> bool:
    """X as a bitmask (bit i-1 = position i) or an iterable of positions."""
    if isinstance(X, int):
        positions_of(X, g.n)  # range check
        mask = X
    else:
        mask = positions_to_mask(positions_of(X, g.n))
    return all(mask & line for line in _line_masks(g))


def _corner_cell_masks(g: GridSpec, corner: Corner) -> list[list[int]]:
    return [[1 << (position_of(g, col, band) - 1) for col in corner.cols] for band in corner.bands]


def _corner_ample_masks(g: GridSpec, corner: Corner) -> list[int]:
    cells = _corner_cell_masks(g, corner)
    p, q = corner.shape
    flat = [m for row in cells for m in row]
    row_lines = [sum(row) for row in cells]
    col_lines = [sum(cells[i][j] for i in range(p)) for j in range(q)]
    lines = row_lines + col_lines
    out = []
    for bits in range(1 << (p * q)):
        mask = 0
        for i, m in enumerate(flat):
            if bits >> i & 1:
                mask |= m
        if all(mask & line for line in lines):
            out.append(mask)
    return out


def extra_mask(g: GridSpec) -> int:
    return positions_to_mask(i for i, pt in enumerate(grid_points(g), 1) if pt.kind is not Kind.MAIN)


def ample_masks(g: GridSpec, with_extras: bool = True) -> Iterator[int]:
    """Every ample subset of g as a bitmask, extras ranging freely if requested.

    Only practical while each corner is small (at most about 20 cells).
    """
    per_corner = [_corner_ample_masks(g, c) for c in corners(g)]
    extra_bits = [1 << (i - 1) for i, pt in enumerate(grid_points(g), 1) if pt.kind is not Kind.MAIN]
    extra_choices = [0]
    if with_extras:
        extra_choices = [
            sum(b for b, keep in zip(extra_bits, pick) if keep)
            for pick in itertools.product((0, 1), repeat=len(extra_bits))
        ]
    for parts in itertools.product(*per_corner):
        main = parts[0] | parts[1] | parts[2] | parts[3]
        for extra in extra_choices:
            yield main | extra


def random_ample_mask(g: GridSpec, rng: random.Random) -> int:
    """A uniformly random ample subset, extras included uniformly.

    Rejection sampling corner by corner; corners are disjoint, so the
    product of uniform corner samples is uniform over ample subsets.
    """
    mask = 0
    for corner in corners(g):
        cells = _corner_cell_masks(g, corner)
        p, q = corner.shape
        while True:
            bits = [[rng.getrandbits(1) for _ in range(q)] for _ in range(p)]
            if all(any(row) for row in bits) and all(any(bits[i][j] for i in range(p)) for j in range(q)):
                break
        for i in range(p):
            for j in range(q):
                if bits[i][j]:
                    mask |= cells[i][j]
    for i, pt in enumerate(grid_points(g), 1):
        if pt.kind is not Kind.MAIN and rng.getrandbits(1):
            mask |= 1 << (i - 1)
    return mask
