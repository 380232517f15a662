"""Exact support enumeration for bimatrix games.

For a support pair (S, T) each side is solved separately: player 2's mix
over T must make player 1 indifferent on S (and not prefer any row off S),
and symmetrically for player 1's mix over S. A side whose feasible set is
more than a point makes the whole equilibrium set positive-dimensional
as soon as the other side is feasible; the count is then aborted.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from errors import InvalidInputError
from games import Game, Matrix, MixedProfile, transpose

from .base import BatchResult, EnumerationResult, Enumerator
from .linalg import SystemKind, integer_row, solve_integer_system
from .simplex import ExactLP

logger = logging.getLogger(__name__)

Support = tuple[int, ...]


class SideKind(Enum):
    EMPTY = "empty"
    POINT = "point"
    WIDE = "wide"


@dataclass(frozen=True)
class SideResult:
    kind: SideKind
    point: tuple[Fraction, ...] | None = None
    strictly_positive: bool = False
    # equalities alone have no solution (monotone in the own support)
    inconsistent: bool = False


class SideSystem:
    """Opponent mixes over `opp` that leave the owner indifferent on `own` and content off it."""

    def __init__(self, a: Matrix, own: Support, opp: Support) -> None:
        self.own = own
        self.opp = opp
        anchor = a[own[0]]
        self.equalities = [[a[s][t] - anchor[t] for t in opp] for s in own[1:]]
        own_set = set(own)
        self.off_rows = [[a[s][t] - anchor[t] for t in opp] for s in range(len(a)) if s not in own_set]

    def eliminate(self) -> SideResult | None:
        """Resolve the side by elimination; None when the system is rank-deficient."""
        k = len(self.opp)
        augmented = [integer_row(row + [0]) for row in self.equalities]
        augmented.append([1] * k + [1])
        solution = solve_integer_system(augmented, k)
        if solution.kind is SystemKind.INCONSISTENT:
            return SideResult(SideKind.EMPTY, inconsistent=True)
        if solution.kind is SystemKind.UNDERDETERMINED:
            return None
        point = solution.point
        if any(p < 0 for p in point):
            return SideResult(SideKind.EMPTY)
        for row in self.off_rows:
            if sum(c * p for c, p in zip(row, point)) > 0:
                return SideResult(SideKind.EMPTY)
        return SideResult(SideKind.POINT, point, all(p > 0 for p in point))

    def solve_lp(self) -> SideResult:
        k = len(self.opp)
        a_eq = self.equalities + [[Fraction(1)] * k]
        b_eq = [Fraction(0)] * len(self.equalities) + [Fraction(1)]
        lp = ExactLP(a_eq, b_eq, self.off_rows, [Fraction(0)] * len(self.off_rows))
        if not lp.feasible:
            return SideResult(SideKind.EMPTY)
        if not lp.is_single_point():
            return SideResult(SideKind.WIDE)
        point = lp.vertex()
        return SideResult(SideKind.POINT, point, all(p > 0 for p in point))

    def resolve(self) -> SideResult:
        result = self.eliminate()
        return self.solve_lp() if result is None else result


def _mask(support: Support) -> int:
    return sum(1 << s for s in support)


def _covered(memo: dict[int, list[int]], key: int, mask: int) -> bool:
    return any(m & mask == m for m in memo.get(key, ()))


def all_supports(n: int) -> list[Support]:
    return [s for size in range(1, n + 1) for s in itertools.combinations(range(n), size)]


def _spread(n: int, support: Support, values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    dist = [Fraction(0)] * n
    for s, p in zip(support, values):
        dist[s] = p
    return tuple(dist)


def scan_bimatrix(g: Game, row_supports: tuple[Support, ...]) -> BatchResult:
    """Scan every (S, T) with S in row_supports and T over all column supports."""
    row, col = g.matrices
    col_t = transpose(col)
    n1, n2 = g.shape
    col_supports = all_supports(n2)
    # inconsistent equality systems, keyed by the fixed opponent support
    y_memo: dict[int, list[int]] = {}
    x_memo: dict[int, list[int]] = {}
    found = []
    scanned = 0
    for S in row_supports:
        s_mask = _mask(S)
        for T in col_supports:
            t_mask = _mask(T)
            scanned += 1
            if _covered(y_memo, t_mask, s_mask) or _covered(x_memo, s_mask, t_mask):
                continue
            y_sys = SideSystem(row, S, T)
            y_side = y_sys.eliminate()
            if y_side is not None and y_side.kind is SideKind.EMPTY:
                if y_side.inconsistent:
                    y_memo.setdefault(t_mask, []).append(s_mask)
                continue
            x_sys = SideSystem(col_t, T, S)
            x_side = x_sys.eliminate()
            if x_side is not None and x_side.kind is SideKind.EMPTY:
                if x_side.inconsistent:
                    x_memo.setdefault(s_mask, []).append(t_mask)
                continue
            if y_side is None:
                y_side = y_sys.solve_lp()
                if y_side.kind is SideKind.EMPTY:
                    continue
            if x_side is None:
                x_side = x_sys.solve_lp()
                if x_side.kind is SideKind.EMPTY:
                    continue
            if SideKind.WIDE in (x_side.kind, y_side.kind):
                logger.debug("positive-dimensional equilibrium set on supports %s x %s", S, T)
                return BatchResult((), True, scanned)
            if x_side.strictly_positive and y_side.strictly_positive:
                found.append(MixedProfile((_spread(n1, S, x_side.point), _spread(n2, T, y_side.point))))
    return BatchResult(tuple(found), False, scanned)


def scan_symmetric(g: Game, supports: tuple[Support, ...]) -> BatchResult:
    row, _ = g.matrices
    n = g.shape[0]
    found = []
    scanned = 0
    for S in supports:
        scanned += 1
        side = SideSystem(row, S, S).resolve()
        if side.kind is SideKind.EMPTY:
            continue
        if side.kind is SideKind.WIDE:
            logger.debug("positive-dimensional symmetric equilibrium set on support %s", S)
            return BatchResult((), True, scanned)
        if side.strictly_positive:
            dist = _spread(n, S, side.point)
            found.append(MixedProfile((dist, dist)))
    return BatchResult(tuple(found), False, scanned)


def _chunks(items: list[Support], count: int) -> list[tuple[Support, ...]]:
    count = max(1, min(count, len(items)))
    return [tuple(items[i::count]) for i in range(count)]


class BimatrixSupportEnumerator(Enumerator):
    name = "support-enumeration"

    def validate(self, g: Game) -> None:
        g.require_bimatrix()

    def batches(self, g: Game) -> list[tuple[Support, ...]]:
        supports = all_supports(g.shape[0])
        if self.jobs == 1:
            return [tuple(supports)]
        return _chunks(supports, self.jobs * 4)

    def batch_worker(self):
        return scan_bimatrix


class SymmetricSupportEnumerator(BimatrixSupportEnumerator):
    name = "symmetric-support-enumeration"

    def validate(self, g: Game) -> None:
        g.require_bimatrix()
        if not g.is_symmetric:
            raise InvalidInputError("symmetric enumeration needs R = C^T on identical strategy labels")

    def batch_worker(self):
        return scan_symmetric


def enumerate_ne_bimatrix(g: Game, jobs: int | None = None, cap: int | None = None) -> EnumerationResult:
    return BimatrixSupportEnumerator(jobs=jobs, cap=cap).enumerate(g)


def enumerate_symmetric_ne(g: Game, jobs: int | None = None, cap: int | None = None) -> EnumerationResult:
    return SymmetricSupportEnumerator(jobs=jobs, cap=cap).enumerate(g)


def find_identical_strategy_ne(g: Game) -> MixedProfile | None:
    """An equilibrium (x, x) with both players on the same mix, or None.

    Works on any square bimatrix game: for each support S one LP asks for
    a single x over S that leaves both players indifferent on S and content
    off it. Any feasible vertex is such an equilibrium.
    """
    g.require_bimatrix()
    n = g.shape[0]
    if g.shape[1] != n:
        raise InvalidInputError(f"identical strategies need a square game, got {g.shape}")
    row, col = g.matrices
    col_t = transpose(col)
    for S in all_supports(n):
        for_row = SideSystem(row, S, S)
        for_col = SideSystem(col_t, S, S)
        equalities = for_row.equalities + for_col.equalities
        a_eq = equalities + [[Fraction(1)] * len(S)]
        b_eq = [Fraction(0)] * len(equalities) + [Fraction(1)]
        a_ub = for_row.off_rows + for_col.off_rows
        lp = ExactLP(a_eq, b_eq, a_ub, [Fraction(0)] * len(a_ub))
        if lp.feasible:
            dist = _spread(n, S, lp.vertex())
            logger.debug("identical-strategy equilibrium on support %s", S)
            return MixedProfile((dist, dist))
    return None
