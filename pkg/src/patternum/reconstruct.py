"""Recover an ample subset X of pi_n from its pattern alone."""

from __future__ import annotations

from collections.abc import Sequence

from .ample import is_ample
from .construction import GridSpec, permutation_for, position_of
from .errors import ReconstructionError
from .perm import Permutation, subsequence_pattern


def _ascending_runs(tau: Sequence[int]) -> list[list[int]]:
    # runs of 0-based indices into tau
    out = [[0]]
    for i in range(1, len(tau)):
        if tau[i - 1] > tau[i]:
            out.append([i])
        else:
            out[-1].append(i)
    return out


def reconstruct(g: GridSpec, tau: Sequence[int]) -> frozenset[int]:
    """Return the unique ample X with pattern ``tau``.

    Columns come from the ascending runs of ``tau``; bands come from the
    decreasing runs of positions when the main entries are read in value
    order.  Raises :class:`ReconstructionError` when ``tau`` is not the
    pattern of an ample subset of ``g``.

    >>> from patternum.construction import grid_for
    >>> sorted(reconstruct(grid_for(16), (2, 6, 4, 8, 3, 7, 1, 5)))
    [1, 3, 6, 8, 10, 12, 13, 15]
    """
    tau = Permutation(tau)
    m = len(tau)
    if m > g.n:
        raise ReconstructionError("PatternMismatch", f"pattern of length {m} exceeds n={g.n}")

    runs = _ascending_runs(tau)
    if len(runs) == g.cols + 1 and g.extra_col:
        col_runs, extra_col_run = runs[:-1], runs[-1]
    elif len(runs) == g.cols:
        col_runs, extra_col_run = runs, []
    else:
        raise ReconstructionError(
            "RunCountMismatch", f"{len(runs)} ascending runs, expected {g.cols}" + (f" or {g.cols + 1}" if g.extra_col else "")
        )

    column = {}
    for col, run in enumerate(col_runs, 1):
        for i in run:
            column[i] = col

    # extra-row cells are exactly the entries above everything in the left half
    left_max = max(tau[i] for run in col_runs[: g.left_cols] for i in run)
    extra_row = [i for i in range(m) if tau[i] > left_max]
    hosts = set()
    for i in extra_row:
        col = column.get(i)
        if (
            col is None
            or not g.left_cols < col <= g.left_cols + g.extra_row
            or col_runs[col - 1][-1] != i
            or col in hosts
        ):
            raise ReconstructionError("ExtraRowInvalid", f"entry {i + 1} cannot sit in the extra row")
        hosts.add(col)
    extra_row_set = set(extra_row)

    main = [i for run in col_runs for i in run if i not in extra_row_set]
    main.sort(key=tau.__getitem__)
    band = {}
    current = 1
    for prev, i in zip([None] + main, main):
        if prev is not None and i > prev:
            current += 1
        band[i] = current
    if current != g.rows or not main:
        raise ReconstructionError("BandCountMismatch", f"{current} bands, expected {g.rows}")

    for i in extra_col_run:
        above = [j for j in main if tau[j] > tau[i]]
        if not above:
            raise ReconstructionError("BandCountMismatch", f"entry {i + 1} lies above every band")
        band[i] = band[min(above, key=tau.__getitem__)]
        column[i] = g.cols + 1
    for i in extra_row:
        band[i] = g.rows + 1

    positions = set()
    for i in range(m):
        pos = position_of(g, column[i], band[i])
        if pos is None:
            raise ReconstructionError(
                "PatternMismatch", f"entry {i + 1} maps to a missing cell ({column[i]}, {band[i]})"
            )
        positions.add(pos)
    X = frozenset(positions)

    if not is_ample(g, X):
        raise ReconstructionError("NotAmple", "the recovered subset is not ample")
    if len(X) != m or subsequence_pattern(permutation_for(g), X) != tau:
        raise ReconstructionError("PatternMismatch", "the recovered subset has a different pattern")
    return X
