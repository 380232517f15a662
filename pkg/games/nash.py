"""Expected utilities, the Nash test and structural checks."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from arith import Scalar
from errors import InvalidInputError, InvariantViolation

from .game import Game, PureProfile
from .profile import MixedProfile

logger = logging.getLogger(__name__)


def expected_utility(g: Game, sigma: MixedProfile, i: int) -> Scalar:
    """U_i(sigma): exact expectation over the product distribution."""
    sigma.check_shape(g)
    _check_player(g, i)
    total: Scalar = Fraction(0)
    for profile in itertools.product(*sigma.supports):
        weight = prod(sigma.distributions[p][s] for p, s in enumerate(profile))
        total += weight * g.utility(profile)[i]
    return total


def profile_utilities(g: Game, sigma: MixedProfile) -> tuple[Scalar, ...]:
    return tuple(expected_utility(g, sigma, i) for i in range(g.player_count))


def conditional_utilities(g: Game, sigma: MixedProfile, i: int) -> tuple[Scalar, ...]:
    """U_i(sigma_{-i} <> t) for every strategy t of player i."""
    sigma.check_shape(g)
    _check_player(g, i)
    others = [p for p in range(g.player_count) if p != i]
    n_i = g.shape[i]
    stride_i = g.stride(i)
    acc: list[Scalar] = [Fraction(0)] * n_i
    for partial in itertools.product(*(sigma.support(p) for p in others)):
        weight = prod(sigma.distributions[p][s] for p, s in zip(others, partial))
        base = sum(s * g.stride(p) for p, s in zip(others, partial))
        for t in range(n_i):
            u = g.table[base + t * stride_i][i]
            if u:
                acc[t] += weight * u
    return tuple(acc)


def conditional_utility(g: Game, sigma: MixedProfile, i: int, t: int) -> Scalar:
    if not 0 <= t < g.shape[i]:
        raise InvalidInputError(f"strategy {t} out of range for player {i}")
    return conditional_utilities(g, sigma, i)[t]


@dataclass(frozen=True)
class Violation:
    """Player `player` gains `gain` by moving weight from `supported_strategy` to `strategy`."""

    player: int
    strategy: int
    supported_strategy: int
    gain: Scalar

    def describe(self) -> str:
        return (
            f"player {self.player}, strategy {self.strategy} beats "
            f"{self.supported_strategy} by {self.gain}"
        )


@dataclass(frozen=True)
class NashCheck:
    is_nash: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.is_nash


def is_nash(g: Game, sigma: MixedProfile) -> NashCheck:
    """Supported strategies must tie at the best conditional utility."""
    sigma.check_shape(g)
    for i in range(g.player_count):
        values = conditional_utilities(g, sigma, i)
        best = max(values)
        support = sigma.support(i)
        worst = min(values[s] for s in support)
        if worst < best:
            strategy = values.index(best)
            supported = next(s for s in support if values[s] == worst)
            return NashCheck(False, Violation(i, strategy, supported, best - worst))
    return NashCheck(True)


@dataclass(frozen=True)
class StructureReport:
    win_lose: bool
    pup: bool
    # per player: partial profiles of the others that leave that player at 0
    all_zero_counter_strategies: tuple[tuple[PureProfile, ...], ...]


def check_structure(g: Game) -> StructureReport:
    counters = []
    for i in range(g.player_count):
        others = [p for p in range(g.player_count) if p != i]
        found = []
        for partial in itertools.product(*(range(g.shape[p]) for p in others)):
            base = sum(s * g.stride(p) for p, s in zip(others, partial))
            if all(g.table[base + t * g.stride(i)][i] <= 0 for t in range(g.shape[i])):
                found.append(partial)
        counters.append(tuple(found))
    pup = not any(counters)
    return StructureReport(win_lose=g.win_lose, pup=pup, all_zero_counter_strategies=tuple(counters))


def has_pup(g: Game) -> bool:
    return check_structure(g).pup


def pure_ne_from_zero_utility(g: Game, sigma: MixedProfile) -> PureProfile:
    """Pure equilibrium of a win-lose bimatrix game, given an equilibrium where some player earns 0."""
    g.require_bimatrix()
    g.require_win_lose()
    if not is_nash(g, sigma):
        raise InvalidInputError("profile is not a Nash equilibrium")
    u1, u2 = profile_utilities(g, sigma)
    row, col = g.matrices
    n1, n2 = g.shape
    supp1, supp2 = sigma.supports

    if u1 == 0:
        # the column support sits inside the all-zero columns of R
        zero_cols = [j for j in range(n2) if all(row[i][j] == 0 for i in range(n1))]
        rows = _supported_first(supp1, range(n1))
        cols = _supported_first(supp2, zero_cols)
        candidate = next(((i, j) for i in rows for j in cols if col[i][j] == 1), None)
    elif u2 == 0:
        zero_rows = [i for i in range(n1) if all(col[i][j] == 0 for j in range(n2))]
        rows = _supported_first(supp1, zero_rows)
        cols = _supported_first(supp2, range(n2))
        candidate = next(((i, j) for j in cols for i in rows if row[i][j] == 1), None)
    else:
        raise InvalidInputError("no player has expected utility 0")

    profile = candidate if candidate is not None else (supp1[0], supp2[0])
    if not is_nash(g, MixedProfile.pure(g.shape, profile)):
        raise InvariantViolation(f"constructed pure profile {profile} is not an equilibrium")
    logger.debug("pure equilibrium %s from zero-utility profile", profile)
    return profile


def _supported_first(support, pool) -> list[int]:
    pool = list(pool)
    return [s for s in support if s in pool] + [s for s in pool if s not in support]


def _check_player(g: Game, i: int) -> None:
    if not 0 <= i < g.player_count:
        raise InvalidInputError(f"player {i} out of range")
