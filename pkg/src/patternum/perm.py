"""Permutations in one-line notation and the operations on them.

Values are 1-based: a permutation of length m is a rearrangement of 1..m.
Index sets are sets of 1-based positions; wherever a bitmask is accepted,
bit ``i - 1`` stands for position ``i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Union

from .errors import (
    DuplicateElements,
    EmptyInput,
    EmptySubset,
    IndexOutOfRange,
    NotAPermutation,
    TooLong,
)

IndexSetLike = Union[int, Iterable[int]]

MAX_KEY_LENGTH = 255


class Permutation(tuple):
    """An immutable permutation of 1..m, stored as its one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(values)
        if not values:
            raise EmptyInput("a permutation has at least one entry")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise NotAPermutation(f"{values} is not a rearrangement of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> Permutation:
        # skips validation; callers guarantee the invariant
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space- or comma-separated 1-based values, e.g. ``"2 4 1 3"``."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(int(t) for t in tokens)
        except ValueError as exc:
            raise NotAPermutation(f"cannot parse permutation from {text!r}") from exc

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def pattern_of(seq: Sequence) -> Permutation:
    """Return the pattern of ``seq``: each entry replaced by its rank.

    >>> str(pattern_of((5, 10, 2)))
    '2 3 1'
    """
    if len(seq) == 0:
        raise EmptyInput("cannot take the pattern of an empty sequence")
    order = sorted(range(len(seq)), key=seq.__getitem__)
    ranks = [0] * len(seq)
    for rank, idx in enumerate(order, 1):
        ranks[idx] = rank
    for a, b in zip(order, order[1:]):
        if not seq[a] < seq[b]:
            raise DuplicateElements(f"entries {a + 1} and {b + 1} compare equal")
    return Permutation._trusted(ranks)


def positions_of(X: IndexSetLike, n: int) -> list[int]:
    """Normalize an index set (bitmask or iterable) to sorted 1-based positions."""
    if isinstance(X, int):
        if X < 0 or X >> n:
            raise IndexOutOfRange(f"bitmask {X:#x} has bits beyond position {n}")
        return [i + 1 for i in range(n) if X >> i & 1]
    positions = sorted(set(X))
    if positions and (positions[0] < 1 or positions[-1] > n):
        raise IndexOutOfRange(f"positions must lie in 1..{n}")
    return positions


def positions_to_mask(positions: Iterable[int]) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << (p - 1)
    return mask


def subsequence_pattern(sigma: Sequence[int], X: IndexSetLike) -> Permutation:
    """The pattern of the entries of ``sigma`` at the positions in ``X``."""
    positions = positions_of(X, len(sigma))
    if not positions:
        raise EmptySubset("the index set is empty")
    return pattern_of([sigma[p - 1] for p in positions])


def inverse(p: Sequence[int]) -> Permutation:
    q = [0] * len(p)
    for i, v in enumerate(p, 1):
        q[v - 1] = i
    return Permutation._trusted(q)


def reverse(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(p[::-1])


def complement(p: Sequence[int]) -> Permutation:
    m = len(p) + 1
    return Permutation._trusted(m - v for v in p)


def descents(p: Sequence[int]) -> list[int]:
    """Positions i (1-based, left element of the pair) with p(i) > p(i+1)."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def runs(p: Sequence[int]) -> list[list[int]]:
    """Split p at its descents into maximal ascending runs of values."""
    out = [[p[0]]] if len(p) else []
    for a, b in zip(p, p[1:]):
        if a > b:
            out.append([b])
        else:
            out[-1].append(b)
    return out


def pattern_key(p: Sequence[int]) -> bytes:
    """Length byte followed by one byte per value."""
    if len(p) > MAX_KEY_LENGTH:
        raise TooLong(f"pattern keys hold at most {MAX_KEY_LENGTH} values")
    return bytes((len(p), *p))


def decode_pattern_key(key: bytes) -> Permutation:
    if not key or key[0] != len(key) - 1:
        raise ValueError(f"malformed pattern key {key!r}")
    return Permutation(key[1:])


def symmetry_class(p: Sequence[int]) -> frozenset[Permutation]:
    """Orbit of p under the group generated by reverse, complement and inverse."""
    start = Permutation(p)
    orbit = {start}
    frontier = [start]
    while frontier:
        q = frontier.pop()
        for g in (reverse(q), complement(q), inverse(q)):
            if g not in orbit:
                orbit.add(g)
                frontier.append(g)
    return frozenset(orbit)


def canonical(p: Sequence[int]) -> Permutation:
    """Lexicographically least member of the symmetry class of p."""
    return min(symmetry_class(p))
