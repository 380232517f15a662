"""Exact elimination on integer systems."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


class SystemKind(Enum):
    INCONSISTENT = "inconsistent"
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class LinearSolution:
    kind: SystemKind
    point: tuple[Fraction, ...] | None = None
    rank: int = 0


def integer_row(coefficients: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    fracs = [Fraction(c) for c in coefficients]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * scale) for f in fracs]


def _reduce(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def solve_integer_system(augmented: Sequence[Sequence[int]], unknowns: int) -> LinearSolution:
    """Gauss-Jordan over the integers on [A | b], rows kept primitive."""
    m = [list(row) for row in augmented]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(unknowns):
        p = next((q for q in range(r, len(m)) if m[q][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot_row = m[r]
        lead = pivot_row[c]
        for q in range(len(m)):
            if q != r and m[q][c] != 0:
                factor = m[q][c]
                m[q] = _reduce([lead * x - factor * y for x, y in zip(m[q], pivot_row)])
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    if any(row[unknowns] != 0 for row in m[r:]):
        return LinearSolution(SystemKind.INCONSISTENT, rank=r)
    if r < unknowns:
        return LinearSolution(SystemKind.UNDERDETERMINED, rank=r)
    point = [Fraction(0)] * unknowns
    for row_index, c in pivots:
        point[c] = Fraction(m[row_index][unknowns], m[row_index][c])
    return LinearSolution(SystemKind.UNIQUE, tuple(point), rank=r)
