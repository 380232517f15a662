from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from arith import QuadExt, Scalar, is_rational_scalar, sign, simplify
from errors import InvalidInputError

from .game import Game, PureProfile


class FieldTag(str, Enum):
    RATIONAL = "rational"
    QUAD_EXT = "quad_ext"


Distribution = tuple[Scalar, ...]


@dataclass(frozen=True)
class MixedProfile:
    """One exact probability vector per player."""

    distributions: tuple[Distribution, ...]

    def __post_init__(self) -> None:
        cleaned = []
        for player, dist in enumerate(self.distributions):
            if not dist:
                raise InvalidInputError(f"player {player} has an empty distribution")
            values = tuple(simplify(p) if isinstance(p, QuadExt) else Fraction(p) for p in dist)
            if any(sign(p) < 0 for p in values):
                raise InvalidInputError(f"player {player} has a negative probability")
            if sum(values) != 1:
                raise InvalidInputError(f"player {player} probabilities sum to {sum(values)}, not 1")
            cleaned.append(values)
        object.__setattr__(self, "distributions", tuple(cleaned))

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[Scalar]]) -> MixedProfile:
        return cls(tuple(tuple(v) for v in vectors))

    @classmethod
    def pure(cls, shape: Sequence[int], profile: PureProfile) -> MixedProfile:
        if len(shape) != len(profile):
            raise InvalidInputError("pure profile length does not match player count")
        return cls(tuple(_unit(n, s) for n, s in zip(shape, profile)))

    @classmethod
    def uniform(cls, shape: Sequence[int], supports: Sequence[Sequence[int]]) -> MixedProfile:
        return cls(tuple(uniform_on(n, support) for n, support in zip(shape, supports)))

    @property
    def player_count(self) -> int:
        return len(self.distributions)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(dist) for dist in self.distributions)

    @property
    def field_tag(self) -> FieldTag:
        if all(is_rational_scalar(p) for dist in self.distributions for p in dist):
            return FieldTag.RATIONAL
        return FieldTag.QUAD_EXT

    def support(self, player: int) -> tuple[int, ...]:
        return tuple(s for s, p in enumerate(self.distributions[player]) if p != 0)

    @property
    def supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.support(i) for i in range(self.player_count))

    @property
    def is_pure(self) -> bool:
        return all(len(support) == 1 for support in self.supports)

    def as_pure(self) -> PureProfile | None:
        if not self.is_pure:
            return None
        return tuple(support[0] for support in self.supports)

    def probability(self, player: int, strategy: int) -> Scalar:
        return self.distributions[player][strategy]

    def replace(self, player: int, dist: Sequence[Scalar]) -> MixedProfile:
        dists = list(self.distributions)
        dists[player] = tuple(dist)
        return MixedProfile(tuple(dists))

    def check_shape(self, game: Game) -> None:
        if self.shape != game.shape:
            raise InvalidInputError(f"profile shape {self.shape} does not match game shape {game.shape}")

    def sort_key(self) -> tuple:
        """Lexicographic key over (supports, probabilities)."""
        probs = tuple(_scalar_key(p) for dist in self.distributions for p in dist)
        return (self.supports, probs)


def _unit(n: int, s: int) -> Distribution:
    if not 0 <= s < n:
        raise InvalidInputError(f"strategy {s} out of range 0..{n - 1}")
    return tuple(Fraction(1) if t == s else Fraction(0) for t in range(n))


def uniform_on(n: int, support: Sequence[int]) -> Distribution:
    if not support:
        raise InvalidInputError("uniform support must be nonempty")
    p = Fraction(1, len(support))
    chosen = set(support)
    return tuple(p if t in chosen else Fraction(0) for t in range(n))


def normalize(vector: Sequence[Scalar]) -> Distribution:
    total = sum(vector)
    if total == 0:
        raise InvalidInputError("cannot normalize the zero vector")
    return tuple(simplify(p / total) for p in vector)


def _scalar_key(p: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(p, QuadExt):
        return (p.a, p.b)
    return (Fraction(p), Fraction(0))
