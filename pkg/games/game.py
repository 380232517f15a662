from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Callable, Iterator, Sequence

from errors import InvalidInputError

PureProfile = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Game:
    """Finite r-player game with exact utilities.

    The utility table is dense and flat, in row-major order over pure
    profiles (player 0's strategy varies slowest).
    """

    strategy_labels: tuple[tuple[str, ...], ...]
    table: tuple[tuple[Fraction, ...], ...]
    _strides: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.strategy_labels) < 2:
            raise InvalidInputError("a game needs at least two players")
        for player, labels in enumerate(self.strategy_labels):
            if not labels:
                raise InvalidInputError(f"player {player} has no strategies")
            if len(set(labels)) != len(labels):
                raise InvalidInputError(f"player {player} has duplicate strategy labels")
        expected = prod(len(labels) for labels in self.strategy_labels)
        if len(self.table) != expected:
            raise InvalidInputError(f"utility table has {len(self.table)} entries, expected {expected}")
        r = len(self.strategy_labels)
        for vector in self.table:
            if len(vector) != r:
                raise InvalidInputError(f"utility vector {vector} does not have length {r}")
        strides = []
        acc = 1
        for labels in reversed(self.strategy_labels):
            strides.append(acc)
            acc *= len(labels)
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    @classmethod
    def from_function(
        cls,
        strategy_labels: Sequence[Sequence[str]],
        utility: Callable[[PureProfile], Sequence[Fraction | int]],
    ) -> Game:
        labels = tuple(tuple(player_labels) for player_labels in strategy_labels)
        table = tuple(
            tuple(Fraction(u) for u in utility(profile))
            for profile in itertools.product(*(range(len(player_labels)) for player_labels in labels))
        )
        return cls(labels, table)

    @classmethod
    def from_bimatrix(
        cls,
        row: Sequence[Sequence[Fraction | int]],
        col: Sequence[Sequence[Fraction | int]],
        labels: Sequence[Sequence[str]] | None = None,
    ) -> Game:
        n1 = len(row)
        n2 = len(row[0]) if n1 else 0
        if len(col) != n1 or any(len(r) != n2 for r in row) or any(len(c) != n2 for c in col):
            raise InvalidInputError("row and column payoff matrices must have the same shape")
        if labels is None:
            labels = (tuple(str(i) for i in range(n1)), tuple(str(j) for j in range(n2)))
        return cls.from_function(labels, lambda s: (row[s[0]][s[1]], col[s[0]][s[1]]))

    @property
    def player_count(self) -> int:
        return len(self.strategy_labels)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(labels) for labels in self.strategy_labels)

    @property
    def is_bimatrix(self) -> bool:
        return self.player_count == 2

    def stride(self, player: int) -> int:
        return self._strides[player]

    def index(self, profile: PureProfile) -> int:
        return sum(s * stride for s, stride in zip(profile, self._strides))

    def utility(self, profile: PureProfile) -> tuple[Fraction, ...]:
        return self.table[self.index(profile)]

    def profiles(self) -> Iterator[PureProfile]:
        return itertools.product(*(range(n) for n in self.shape))

    def label_index(self, player: int, label: str) -> int:
        try:
            return self.strategy_labels[player].index(label)
        except ValueError:
            raise InvalidInputError(f"player {player} has no strategy {label!r}") from None

    @cached_property
    def win_lose(self) -> bool:
        return all(u in (0, 1) for vector in self.table for u in vector)

    @cached_property
    def matrices(self) -> tuple[Matrix, Matrix]:
        """(R, C) payoff matrices of a bimatrix game."""
        if not self.is_bimatrix:
            raise InvalidInputError(f"expected a bimatrix game, got {self.player_count} players")
        n1, n2 = self.shape
        row = tuple(tuple(self.table[i * n2 + j][0] for j in range(n2)) for i in range(n1))
        col = tuple(tuple(self.table[i * n2 + j][1] for j in range(n2)) for i in range(n1))
        return row, col

    @cached_property
    def is_symmetric(self) -> bool:
        """R equals C transposed, on identical label lists."""
        if not self.is_bimatrix or self.strategy_labels[0] != self.strategy_labels[1]:
            return False
        row, col = self.matrices
        n = len(row)
        return all(row[i][j] == col[j][i] for i in range(n) for j in range(n))

    @cached_property
    def pure_utility_vectors(self) -> frozenset[tuple[Fraction, ...]]:
        return frozenset(self.table)

    def require_bimatrix(self) -> None:
        if not self.is_bimatrix:
            raise InvalidInputError(f"expected a bimatrix game, got {self.player_count} players")

    def require_win_lose(self) -> None:
        if not self.win_lose:
            raise InvalidInputError("expected a win-lose game (all utilities in {0, 1})")


def transpose(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(zip(*matrix)) if matrix else ()
