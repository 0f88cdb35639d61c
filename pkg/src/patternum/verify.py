"""Self-verification suites behind ``patternum verify``.

Each check compares a fast path against an independent brute force or an
exact rational statement and reports pass/fail with a short detail line.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .ample import ample_count, ample_masks, count_no_zero_lines, is_ample, _line_masks
from .bounds import eq1_upper, fibonacci, dominance_certified, prop1_exact, constructive_lower
from .construction import GridSpec, construct, grid_for
from .enumeration import distinct_patterns, distribution, h_exact
from .perm import pattern_key, pattern_of, subsequence_pattern, symmetry_class
from .reconstruct import reconstruct


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def brute_no_zero_lines(p: int, q: int) -> int:
    count = 0
    for bits in range(1 << (p * q)):
        rows = [(bits >> (i * q)) & ((1 << q) - 1) for i in range(p)]
        cols = 0
        for r in rows:
            cols |= r
        if all(rows) and cols == (1 << q) - 1:
            count += 1
    return count


def brute_ample_count(g: GridSpec) -> int:
    masks = np.arange(1 << g.main_size, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    for line in _line_masks(g):
        ok &= (masks & line) != 0
    return int(ok.sum())


def _check_worked_example():
    got = pattern_of((5, 10, 2))
    return got == (2, 3, 1), f"pattern_of(5,10,2) = {got}"


def _check_no_zero_lines(limit):
    def check():
        bad = [(p, q) for p in range(limit + 1) for q in range(limit + 1)
               if count_no_zero_lines(p, q) != brute_no_zero_lines(p, q)]
        return not bad, f"p,q <= {limit}, mismatches {bad}"
    return check


def _check_ample_brute():
    shapes = [(R, C) for R in range(1, 21) for C in range(1, 21) if R * C <= 20]
    bad = [s for s in shapes if ample_count(GridSpec(s[0] * s[1], *s)) != brute_ample_count(GridSpec(s[0] * s[1], *s))]
    return not bad, f"{len(shapes)} grid shapes with R*C <= 20, mismatches {bad}"


def _roundtrip(n: int, expected: int):
    def check():
        g = grid_for(n)
        pi, _ = construct(n)
        masks = list(ample_masks(g))
        keys = set()
        ok = 0
        for mask in masks:
            tau = subsequence_pattern(pi, mask)
            keys.add(pattern_key(tau))
            X = reconstruct(g, tau)
            ok += sum(1 << (p - 1) for p in X) == mask
        passed = len(masks) == expected and len(keys) == expected and ok == expected
        return passed, f"n={n}: {len(masks)} ample, {len(keys)} distinct patterns, {ok} roundtrips"
    return check


def _check_dominance():
    failures, first = [], None
    for n in range(4, 401):
        holds, nontrivial = dominance_certified(n)
        if not holds:
            failures.append(n)
        if nontrivial and first is None:
            first = n
    return not failures, f"4 <= n <= 400, failures {failures}, non-trivial from n={first}"


def _check_census16():
    total = distinct_patterns(construct(16)[0]).total
    return 2401 <= total <= 45116 and total > 512, f"|P(pi_16)| = {total}"


def _check_prop1():
    bad = [k for k in range(1, 33) if not prop1_exact(k)]
    return not bad, f"k = 1..32, failures {bad}"


def _check_h():
    hs = [h_exact(n)[0] for n in range(1, 9)]
    ok = hs[:4] == [1, 2, 4, 8]
    ok &= all(a <= b for a, b in zip(hs, hs[1:]))
    ok &= all(h <= eq1_upper(n) for n, h in enumerate(hs, 1))
    ok &= all(hs[n - 1] >= distinct_patterns(construct(n)[0]).total for n in range(4, 9))
    ok &= all(hs[n - 1] > fibonacci(n) for n in range(3, 9))
    return ok, f"h(1..8) = {hs}"


def _check_distribution():
    ok = distribution(3) == {3: 2, 4: 4}
    for n in range(1, 7):
        hist = distribution(n)
        ok &= sum(hist.values()) == len(list(itertools.permutations(range(n))))
        ok &= max(hist) == h_exact(n)[0]
    return ok, "distribution(3) and n <= 6 histograms"


def _check_symmetry():
    bad = 0
    for n in range(1, 7):
        for p in itertools.permutations(range(1, n + 1)):
            ref = distinct_patterns(p)
            bad += any(distinct_patterns(q) != ref for q in symmetry_class(p))
    return not bad, f"n <= 6, {bad} permutations with asymmetric censuses"


def _check_dominance_small():
    bad = [n for n in range(4, 23)
           if not constructive_lower(n) <= distinct_patterns(construct(n)[0]).total <= eq1_upper(n)]
    return not bad, f"4 <= n <= 22 census within bounds, failures {bad}"


QUICK: list[tuple[str, Callable]] = [
    ("worked example pattern_of", _check_worked_example),
    ("count_no_zero_lines oracle p,q<=3", _check_no_zero_lines(3)),
    ("n=16 exhaustive roundtrip", _roundtrip(16, 2401)),
    ("constructive dominance n<=400", _check_dominance),
]

FULL: list[tuple[str, Callable]] = QUICK + [
    ("count_no_zero_lines oracle p,q<=4", _check_no_zero_lines(4)),
    ("ample_count oracle R*C<=20", _check_ample_brute),
    ("n=18 exhaustive roundtrip", _roundtrip(18, 9604)),
    ("n=20 exhaustive roundtrip", _roundtrip(20, 30625)),
    ("census of pi_16", _check_census16),
    ("census within bounds n<=22", _check_dominance_small),
    ("ample fraction exceeds 1-8k/2^k", _check_prop1),
    ("exact h(n) n<=8", _check_h),
    ("distribution n<=6", _check_distribution),
    ("symmetry invariance n<=6", _check_symmetry),
]


def run_checks(level: str = "quick") -> list[CheckResult]:
    suite = {"quick": QUICK, "full": FULL}[level]
    results = []
    for name, fn in suite:
        start = time.perf_counter()
        passed, detail = fn()
        results.append(CheckResult(name, bool(passed), detail, time.perf_counter() - start))
    return results
