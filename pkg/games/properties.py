"""Checkable predicates on a given profile (the side conditions of the decision problems)."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from arith import is_rational_scalar
from errors import InvalidInputError

from .game import Game
from .nash import profile_utilities
from .profile import MixedProfile


class PropertySpec(ABC):
    """Base class for profile properties."""

    @abstractmethod
    def holds(self, g: Game, sigma: MixedProfile) -> bool:
        pass


@dataclass(frozen=True)
class MinUtilityAtLeast(PropertySpec):
    u: Fraction

    def holds(self, g, sigma):
        return min(profile_utilities(g, sigma)) >= self.u


@dataclass(frozen=True)
class MaxUtilityAtMost(PropertySpec):
    u: Fraction

    def holds(self, g, sigma):
        return max(profile_utilities(g, sigma)) <= self.u


@dataclass(frozen=True)
class TotalUtilityAtLeast(PropertySpec):
    u: Fraction

    def holds(self, g, sigma):
        return sum(profile_utilities(g, sigma)) >= self.u


@dataclass(frozen=True)
class TotalUtilityAtMost(PropertySpec):
    u: Fraction

    def holds(self, g, sigma):
        return sum(profile_utilities(g, sigma)) <= self.u


@dataclass(frozen=True)
class SupportSizeAtLeast(PropertySpec):
    k: int

    def holds(self, g, sigma):
        return min(len(s) for s in sigma.supports) >= self.k


@dataclass(frozen=True)
class SupportSizeAtMost(PropertySpec):
    k: int

    def holds(self, g, sigma):
        return max(len(s) for s in sigma.supports) <= self.k


@dataclass(frozen=True)
class SupportContains(PropertySpec):
    strategies: tuple[frozenset[int], ...]

    def holds(self, g, sigma):
        _check_sets(g, self.strategies)
        return all(wanted <= set(s) for wanted, s in zip(self.strategies, sigma.supports))


@dataclass(frozen=True)
class SupportWithin(PropertySpec):
    strategies: tuple[frozenset[int], ...]

    def holds(self, g, sigma):
        _check_sets(g, self.strategies)
        return all(set(s) <= allowed for allowed, s in zip(self.strategies, sigma.supports))


@dataclass(frozen=True)
class MaxProbAtMost(PropertySpec):
    u: Fraction

    def holds(self, g, sigma):
        return all(p <= self.u for dist in sigma.distributions for p in dist)


@dataclass(frozen=True)
class Uniform(PropertySpec):
    def holds(self, g, sigma):
        return all(
            len({dist[s] for s in support}) == 1
            for dist, support in zip(sigma.distributions, sigma.supports)
        )


@dataclass(frozen=True)
class NonUniform(PropertySpec):
    def holds(self, g, sigma):
        return not Uniform().holds(g, sigma)


@dataclass(frozen=True)
class SymmetricProfile(PropertySpec):
    def holds(self, g, sigma):
        return sigma.player_count == 2 and sigma.distributions[0] == sigma.distributions[1]


@dataclass(frozen=True)
class NonSymmetricProfile(PropertySpec):
    def holds(self, g, sigma):
        return not SymmetricProfile().holds(g, sigma)


@dataclass(frozen=True)
class RationalProfile(PropertySpec):
    def holds(self, g, sigma):
        return all(is_rational_scalar(p) for dist in sigma.distributions for p in dist)


@dataclass(frozen=True)
class PureParetoDominated(PropertySpec):
    """Some pure profile makes nobody worse off and somebody strictly better off.

    Sound but incomplete against mixed dominators.
    """

    def holds(self, g, sigma):
        current = profile_utilities(g, sigma)
        return any(
            all(u >= c for u, c in zip(vector, current)) and any(u > c for u, c in zip(vector, current))
            for vector in g.pure_utility_vectors
        )


@dataclass(frozen=True)
class PureStrongParetoDominated(PropertySpec):
    """Some pure profile makes somebody strictly better off and every player who changed strategy strictly better off."""

    def holds(self, g, sigma):
        current = profile_utilities(g, sigma)
        # cheap pass: a vector beating every player strictly dominates whatever Diff is
        if any(all(u > c for u, c in zip(vector, current)) for vector in g.pure_utility_vectors):
            return True
        pure = sigma.as_pure()
        for profile in g.profiles():
            vector = g.utility(profile)
            if not any(u > c for u, c in zip(vector, current)):
                continue
            diff = [i for i in range(g.player_count) if pure is None or pure[i] != profile[i]]
            if all(vector[i] > current[i] for i in diff):
                return True
        return False


def evaluate_property(g: Game, sigma: MixedProfile, p: PropertySpec) -> bool:
    sigma.check_shape(g)
    return p.holds(g, sigma)


def _check_sets(g: Game, sets: tuple[frozenset[int], ...]) -> None:
    if len(sets) != g.player_count:
        raise InvalidInputError("one strategy set per player is required")
    for player, chosen in enumerate(sets):
        if any(not 0 <= s < g.shape[player] for s in chosen):
            raise InvalidInputError(f"strategy set {sorted(chosen)} out of range for player {player}")
