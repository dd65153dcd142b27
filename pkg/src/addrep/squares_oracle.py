"""Divisor-formula oracle for sums of two squares.

Counts lattice representations x^2 + y^2 = n through divisor classes mod 4
and bridges them to ordered couples of positive squares, giving a check on
the counting engine that shares none of its code: trial division only, no
spectra, no convolutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass
class OracleReport:
    """Divisor-formula counts vs brute force over 1..range_max.

    ``mismatches`` holds (n, formula count, brute count) rows and must stay
    empty; ``records`` holds (n, count) at every n whose positive-ordered
    count strictly exceeds all earlier ones.
    """

    range_max: int
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    records: list[tuple[int, int]] = field(default_factory=list)


def divisor_counts_mod4(n: int) -> tuple[int, int]:
    """(# divisors of n congruent to 1 mod 4, # congruent to 3 mod 4)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d1 = d3 = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            r = d & 3
            if r == 1:
                d1 += 1
            elif r == 3:
                d3 += 1
            q = n // d
            if q != d:
                r = q & 3
                if r == 1:
                    d1 += 1
                elif r == 3:
                    d3 += 1
        d += 1
    return d1, d3


def r2_lattice(n: int) -> int:
    """Ordered integer couples (x, y), signs and zeros included, with x^2 + y^2 = n."""
    d1, d3 = divisor_counts_mod4(n)
    return 4 * (d1 - d3)


def _is_square(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


def positive_ordered_count(n: int) -> int:
    """Ordered couples of positive squares summing to n.

    Strips the four axis points (present exactly when n is a perfect
    square) from the lattice count, then folds the four sign choices.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return (r2_lattice(n) - (4 if _is_square(n) else 0)) // 4


def brute_positive_count(n: int) -> int:
    """Direct count: x = 1..isqrt(n-1), test n - x^2 a positive perfect square."""
    if n < 2:
        return 0
    count = 0
    isqrt = math.isqrt
    for x in range(1, isqrt(n - 1) + 1):
        y = n - x * x
        r = isqrt(y)
        if r * r == y:
            count += 1
    return count


def _check_range(start: int, stop: int) -> tuple[list[tuple[int, int, int]], list[tuple[int, int]]]:
    """Mismatches and chunk-local running records over [start, stop)."""
    mismatches: list[tuple[int, int, int]] = []
    local_records: list[tuple[int, int]] = []
    best = 0
    for n in range(start, stop):
        formula = positive_ordered_count(n)
        brute = brute_positive_count(n)
        if formula != brute:
            mismatches.append((n, formula, brute))
        if formula > best:
            best = formula
            local_records.append((n, formula))
    return mismatches, local_records


def cross_check(range_max: int, chunks: list[tuple[list, list]] | None = None) -> OracleReport:
    """Audit formula against brute force for every n <= range_max.

    ``chunks`` lets a caller supply precomputed _check_range results for a
    partition of the range in ascending order (used by the parallel CLI
    path); the merged report is identical to the serial one.
    """
    if range_max < 1:
        raise ValueError("range_max must be >= 1")
    if chunks is None:
        chunks = [_check_range(1, range_max + 1)]
    report = OracleReport(range_max=range_max)
    best = 0
    for mismatches, local_records in chunks:
        report.mismatches.extend(mismatches)
        for n, count in local_records:
            if count > best:
                best = count
                report.records.append((n, count))
    return report
