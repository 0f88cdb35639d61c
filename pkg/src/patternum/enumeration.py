"""Exact enumeration of the pattern set P(sigma), h(n) and the |P| distribution.

Large censuses are sharded: the subset space is cut by a fixed number of
high-order position bits (a function of n only, never of the worker count).
Each shard deduplicates its keys per pattern length, and the shards are
merged per length by exact set union.  The answer therefore cannot depend on
how many workers ran.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .errors import CapExceeded, MemoryBudgetExceeded, TooLong, TooSmall
from .perm import Permutation, symmetry_class

MAX_ENUM_LENGTH = 32
DEFAULT_MEMORY_CAP = 8 * 2**30
DEFAULT_H_CAP = 9
DEFAULT_DISTRIBUTION_CAP = 8


@dataclass(frozen=True)
class PatternCensus:
    total: int
    by_length: tuple[int, ...]  # by_length[k - 1] counts patterns of length k


def default_workers() -> int:
    env = os.environ.get("PATTERNUM_THREADS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def shard_bits(n: int) -> int:
    return max(0, min(n - 12, 10))


def estimate_memory(n: int) -> int:
    """Peak bytes a census of length n may need (a deliberately loose bound)."""
    if n <= _kernels.SMALL_MAX:
        return 16 * 2**n
    key_bytes = 8 * _kernels.words_for(n)
    stored = 2**n * key_bytes
    merge = 3 * comb(n, n // 2) * key_bytes
    shard = 2 * 2 ** (n - shard_bits(n)) * key_bytes
    return stored + merge + shard


def _unique_rows(a: np.ndarray) -> np.ndarray:
    if a.shape[1] == 1:
        return np.unique(a[:, 0])[:, None]
    s = a[np.lexsort(a.T[::-1])]
    keep = np.ones(len(s), dtype=bool)
    keep[1:] = np.any(s[1:] != s[:-1], axis=1)
    return s[keep]


def _arrays(sigma: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    perm0 = np.asarray(sigma, dtype=np.int64) - 1
    inv0 = np.empty_like(perm0)
    inv0[perm0] = np.arange(len(perm0))
    return perm0, inv0


def _shard(perm0: np.ndarray, inv0: np.ndarray, hi: int, b: int) -> dict[int, np.ndarray]:
    n = perm0.size
    low_bits = n - b
    hp = bin(hi).count("1")
    counts = np.zeros(n + 1, dtype=np.int64)
    for j in range(low_bits + 1):
        counts[hp + j] = comb(low_bits, j)
    if hi == 0:
        counts[0] = 0
    offsets = np.zeros(n + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(counts)[:-1]
    out = np.empty((int(counts.sum()), _kernels.words_for(n)), dtype=np.uint64)
    _kernels.block_keys(perm0, inv0, hi, low_bits, offsets, out)
    local = {}
    for k in range(1, n + 1):
        if counts[k]:
            rows = out[offsets[k] : offsets[k] + counts[k], : _kernels.words_for(k)]
            local[k] = _unique_rows(rows)
    return local


def distinct_patterns(
    sigma: Sequence[int],
    workers: int = 1,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> PatternCensus:
    """Exact census of the distinct patterns over all non-empty subsets.

    >>> distinct_patterns((2, 4, 1, 3))
    PatternCensus(total=8, by_length=(1, 2, 4, 1))
    """
    sigma = Permutation(sigma)
    n = len(sigma)
    if n > MAX_ENUM_LENGTH:
        raise TooLong(f"enumeration supports length <= {MAX_ENUM_LENGTH}, got {n}")
    need = estimate_memory(n)
    if need > memory_cap:
        raise MemoryBudgetExceeded(f"census of length {n} needs about {need} bytes, cap is {memory_cap}")
    perm0, inv0 = _arrays(sigma)

    if n <= _kernels.SMALL_MAX:
        by_length = tuple(int(c) for c in _kernels.small_census(perm0, inv0)[1:])
        return PatternCensus(sum(by_length), by_length)

    b = shard_bits(n)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        shards = list(pool.map(lambda hi: _shard(perm0, inv0, hi, b), range(1 << b)))

    by_length = []
    for k in range(1, n + 1):
        parts = [s.pop(k) for s in shards if k in s]
        merged = parts[0] if len(parts) == 1 else _unique_rows(np.concatenate(parts))
        by_length.append(len(merged))
    return PatternCensus(sum(by_length), tuple(by_length))


def orbit_representatives(n: int):
    """Yield (representative, orbit size), one per symmetry class, in lex order.

    The first member of an orbit met in lexicographic order is its least
    element, i.e. its canonical representative.
    """
    seen = set()
    for p in itertools.permutations(range(1, n + 1)):
        if p in seen:
            seen.discard(p)
            continue
        orbit = symmetry_class(p)
        seen.update(q for q in orbit if q != p)
        yield Permutation._trusted(p), len(orbit)


def _totals(reps: list[Permutation], workers: int) -> list[int]:
    if workers <= 1:
        return [distinct_patterns(p).total for p in reps]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: distinct_patterns(p).total, reps))


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise TooSmall(f"length must be positive, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the configured cap {cap}")


def h_exact(n: int, cap: int = DEFAULT_H_CAP, workers: int = 1) -> tuple[int, Permutation]:
    """The largest |P(sigma)| over permutations of length n, with a witness.

    The witness is the lexicographically least canonical representative
    attaining the maximum.
    """
    _check_cap(n, cap)
    reps = [p for p, _ in orbit_representatives(n)]
    totals = _totals(reps, workers)
    best = max(range(len(reps)), key=lambda i: (totals[i], -i))
    return totals[best], reps[best]


def distribution(n: int, cap: int = DEFAULT_DISTRIBUTION_CAP, workers: int = 1) -> dict[int, int]:
    """Histogram {|P(pi)|: number of permutations of length n attaining it}."""
    _check_cap(n, cap)
    pairs = list(orbit_representatives(n))
    totals = _totals([p for p, _ in pairs], workers)
    hist = Counter()
    for (_, size), total in zip(pairs, totals):
        hist[total] += size
    return dict(sorted(hist.items()))
