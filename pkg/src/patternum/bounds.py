"""Every bound on h(n) that the construction is measured against.

Counts are exact Python integers.  Real-valued bounds are given as a factor
``f`` in ``2^n * f`` and, when ``f > 0``, as ``n + log2 f``; a non-positive
factor means the bound is trivial and its log2 value is ``None``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from mpmath import iv
from mpmath.libmp import to_rational

from .ample import ample_count
from .construction import GridSpec, construct, grid_for
from .errors import TooSmall

CERTIFY_PREC = 128


def eq1_upper(n: int) -> int:
    """Sum over k of min(k!, C(n, k)): at most k! patterns of length k exist."""
    if n < 1:
        raise TooSmall(f"n must be positive, got {n}")
    return sum(min(factorial(k), comb(n, k)) for k in range(1, n + 1))


def constructive_lower(n: int) -> int:
    """Number of ample subsets of pi_n with extras free; each has its own pattern."""
    g = grid_for(n)
    return ample_count(g) << g.extras


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def coleman_log2(n: int) -> float:
    return n - 2 * math.sqrt(n) + 1


def coleman_exact(n: int) -> int | None:
    """2^(n - 2 sqrt n + 1) as an integer, defined for perfect squares only."""
    if not is_square(n):
        return None
    return 2 ** (n - 2 * isqrt(n) + 1)


def _factor(n: int, coeff: float) -> float:
    root = math.sqrt(n)
    return 1.0 - coeff * root * 2.0 ** (-root / 2)


def _log2_or_none(n: int, factor: float) -> float | None:
    return n + math.log2(factor) if factor > 0 else None


def thm1_factor(n: int) -> float:
    return _factor(n, 4.0)


def intermediate_factor(n: int) -> float:
    return _factor(n, 2.0**2.25)


def final_factor(n: int) -> float:
    return _factor(n, 6.0)


def _between_square_and_rectangle(n: int) -> bool:
    """True when 4k^2 < n < 4k^2 + 2k for some k."""
    k = isqrt(n) // 2
    return 4 * k * k < n < 4 * k * k + 2 * k


def correction_term(g: GridSpec) -> float:
    """Union-bound estimate of the non-ample fraction of g's main grid."""
    R, C = g.rows, g.cols
    if R % 2 == 0:
        k = R // 2
        if C == R:
            return 8 * k / 2**k
        if C == R + 1:
            return (7 * k + 2) / 2**k
    else:
        k = (R - 1) // 2
        if C == R:
            return (6 * k + 3) / 2**k
        if C == R + 1:
            return math.sqrt(2) * (6 * k + 3) / 2**k
    raise ValueError(f"no correction term for a {R} x {C} grid")


def certified_factor_upper(n: int, coeff: int = 6) -> Fraction:
    """Rational number provably >= 1 - coeff * sqrt(n) * 2^(-sqrt(n)/2).

    Interval arithmetic with outward rounding; the right endpoint is exact.
    """
    saved = iv.prec
    iv.prec = CERTIFY_PREC
    try:
        root = iv.sqrt(n)
        bound = 1 - coeff * root / iv.mpf(2) ** (root / 2)
        p, q = to_rational(bound._mpi_[1])
    finally:
        iv.prec = saved
    return Fraction(int(p), int(q))


def dominance_certified(n: int) -> tuple[bool, bool]:
    """(holds, non_trivial) for constructive_lower(n) > 2^n (1 - 6 sqrt n 2^(-sqrt n / 2))."""
    upper = certified_factor_upper(n, 6)
    lower = constructive_lower(n)
    return lower > upper * 2**n, upper > 0


def prop1_exact(k: int) -> bool:
    """ample_count of the 2k x 2k grid exceeds 2^(4k^2) (1 - 8k / 2^k), exactly."""
    n = 4 * k * k
    rhs = Fraction(2**n) * (1 - Fraction(8 * k, 2**k))
    return ample_count(grid_for(n)) > rhs


@dataclass(frozen=True)
class BoundsTable:
    n: int
    eq1_upper: int
    constructive_lower: int
    constructive_lower_log2: float
    coleman_log2: float
    coleman_exact: int | None
    thm1_applies: bool
    thm1_factor: float
    thm1_log2: float | None
    intermediate_applies: bool
    intermediate_factor: float
    intermediate_log2: float | None
    final_factor: float
    final_log2: float | None
    fibonacci: int
    correction_term: float | None
    grid: GridSpec | None


def paper_bounds(n: int) -> BoundsTable:
    if n < 1:
        raise TooSmall(f"n must be positive, got {n}")
    if n >= 4:
        g = grid_for(n)
        lower = constructive_lower(n)
        corr = correction_term(g)
    else:
        from .enumeration import distinct_patterns

        g = None
        lower = distinct_patterns(construct(n)[0]).total
        corr = None
    t1, mid, fin = thm1_factor(n), intermediate_factor(n), final_factor(n)
    return BoundsTable(
        n=n,
        eq1_upper=eq1_upper(n),
        constructive_lower=lower,
        constructive_lower_log2=math.log2(lower),
        coleman_log2=coleman_log2(n),
        coleman_exact=coleman_exact(n),
        thm1_applies=is_square(n) and isqrt(n) % 2 == 0,
        thm1_factor=t1,
        thm1_log2=_log2_or_none(n, t1),
        intermediate_applies=_between_square_and_rectangle(n),
        intermediate_factor=mid,
        intermediate_log2=_log2_or_none(n, mid),
        final_factor=fin,
        final_log2=_log2_or_none(n, fin),
        fibonacci=fibonacci(n),
        correction_term=corr,
        grid=g,
    )
