"""The pattern-rich permutations pi_n.

The permutation is read off a set of grid cells.  Main cells fill an R x C
grid (``band`` is the row, counted from the bottom).  For lengths that are
not a full grid, an extra column of ``c`` cells sits at the bottom right
(column C+1, bands 1..c) and an extra row of ``r`` cells sits on top of the
right half (band R+1, columns C_L+1..C_L+r).

Cells are put in one-line order by ``(col, band)`` and their values ranked
by ``(band, -col)``.  For a pure 2k x 2k grid this is the sequence
``s, s-1, ..., s-2k+1`` with ``s = 2k, 4k, ..., 4k^2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import IndexOutOfRange, TooSmall
from .perm import Permutation

# the grid construction starts at n = 4; these attain h(1), h(2), h(3)
SMALL_WITNESSES = {
    1: (1,),
    2: (1, 2),
    3: (2, 3, 1),
}


class Kind(enum.Enum):
    MAIN = "Main"
    EXTRA_COLUMN = "ExtraColumn"
    EXTRA_ROW = "ExtraRow"


@dataclass(frozen=True)
class GridSpec:
    n: int
    rows: int
    cols: int
    extra_col: int = 0
    extra_row: int = 0

    def __post_init__(self):
        if self.n != self.rows * self.cols + self.extra_col + self.extra_row:
            raise ValueError(f"inconsistent grid {self}")
        if self.extra_col > self.bottom_rows or self.extra_row > self.cols - self.left_cols:
            raise ValueError(f"extra cells overflow the grid {self}")

    @property
    def left_cols(self) -> int:
        return self.cols // 2

    @property
    def bottom_rows(self) -> int:
        return self.rows // 2

    @property
    def main_size(self) -> int:
        return self.rows * self.cols

    @property
    def extras(self) -> int:
        return self.extra_col + self.extra_row


@dataclass(frozen=True, order=True)
class GridPoint:
    col: int
    band: int
    kind: Kind = Kind.MAIN

    def __str__(self) -> str:
        if self.kind is Kind.EXTRA_COLUMN:
            return f"ExtraColumn(band={self.band})"
        if self.kind is Kind.EXTRA_ROW:
            return f"ExtraRow(col={self.col})"
        return f"Main(col={self.col}, band={self.band})"


def grid_for(n: int) -> GridSpec:
    """Grid shape used for length n (n >= 4).

    >>> grid_for(70)
    GridSpec(n=70, rows=8, cols=8, extra_col=4, extra_row=2)
    """
    if n < 4:
        raise TooSmall(f"the grid construction needs n >= 4, got {n}")
    a = isqrt(n)
    rows, cols = (a, a + 1) if n >= a * (a + 1) else (a, a)
    leftover = n - rows * cols
    extra_col = min(leftover, rows // 2)
    return GridSpec(n, rows, cols, extra_col, leftover - extra_col)


@lru_cache(maxsize=None)
def grid_points(g: GridSpec) -> tuple[GridPoint, ...]:
    """All cells of g in one-line (position) order."""
    pts = [GridPoint(col, band) for col in range(1, g.cols + 1) for band in range(1, g.rows + 1)]
    pts += [GridPoint(g.cols + 1, band, Kind.EXTRA_COLUMN) for band in range(1, g.extra_col + 1)]
    pts += [
        GridPoint(col, g.rows + 1, Kind.EXTRA_ROW)
        for col in range(g.left_cols + 1, g.left_cols + g.extra_row + 1)
    ]
    pts.sort(key=lambda pt: (pt.col, pt.band))
    return tuple(pts)


@lru_cache(maxsize=None)
def _position_index(g: GridSpec) -> dict[tuple[int, int], int]:
    return {(pt.col, pt.band): i for i, pt in enumerate(grid_points(g), 1)}


def point_meta(g: GridSpec, position: int) -> GridPoint:
    if not 1 <= position <= g.n:
        raise IndexOutOfRange(f"position {position} outside 1..{g.n}")
    return grid_points(g)[position - 1]


def position_of(g: GridSpec, col: int, band: int) -> int | None:
    """Inverse of :func:`point_meta`; ``None`` if there is no such cell."""
    return _position_index(g).get((col, band))


@lru_cache(maxsize=None)
def _construct(n: int) -> tuple[Permutation, GridSpec | None]:
    if n < 1:
        raise TooSmall(f"length must be positive, got {n}")
    if n in SMALL_WITNESSES:
        return Permutation(SMALL_WITNESSES[n]), None
    g = grid_for(n)
    return permutation_for(g), g


@lru_cache(maxsize=None)
def permutation_for(g: GridSpec) -> Permutation:
    """Rank the cells of g by ``(band, -col)`` and read them in position order."""
    pts = grid_points(g)
    by_value = sorted(range(g.n), key=lambda i: (pts[i].band, -pts[i].col))
    values = [0] * g.n
    for v, i in enumerate(by_value, 1):
        values[i] = v
    return Permutation._trusted(values)


def construct(n: int) -> tuple[Permutation, GridSpec | None]:
    """pi_n together with its grid (``None`` for the hard-coded n <= 3).

    >>> str(construct(16)[0])
    '4 8 12 16 3 7 11 15 2 6 10 14 1 5 9 13'
    """
    return _construct(n)
