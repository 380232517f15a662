"""The win-lose reduction from a gadget game and a 3SAT formula.

Special players 0 and 1 get strategies gadget | literals | clauses | pair
variables; every other player gets gadget | delta. Literals are ordered
l_0, not-l_0, l_1, not-l_1, ... and pair variables v_{i,j} (i != j) are
ordered lexicographically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any

from errors import InvalidInputError
from games import Game, MixedProfile, PureProfile, check_structure
from sat import Assignment, CnfFormula, check_cnf

logger = logging.getLogger(__name__)

SPECIAL_PLAYERS = (0, 1)


class RoleKind(str, Enum):
    GADGET = "gad"
    LITERAL = "lit"
    CLAUSE = "cls"
    PAIR = "var"
    DELTA = "delta"


@dataclass(frozen=True)
class Role:
    kind: RoleKind
    index: int = 0
    other: int = 0
    negated: bool = False

    @property
    def dimacs(self) -> int:
        """Signed 1-based literal for a LITERAL role."""
        return -(self.index + 1) if self.negated else self.index + 1


def cyclic_index_diff(start: int, end: int, n: int) -> int:
    """(end - start) mod n."""
    if n < 1:
        raise InvalidInputError("cyclic order needs n >= 1")
    if not (0 <= start < n and 0 <= end < n):
        raise InvalidInputError(f"indices {start}, {end} out of range 0..{n - 1}")
    return (end - start) % n


@dataclass(frozen=True)
class ReductionLayout:
    r: int
    n: int
    clause_count: int
    gadget_shape: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 2 or len(self.gadget_shape) != self.r:
            raise InvalidInputError("layout needs one gadget strategy count per player, r >= 2")

    def is_special(self, player: int) -> bool:
        return player in SPECIAL_PLAYERS

    def size(self, player: int) -> int:
        g = self.gadget_shape[player]
        if self.is_special(player):
            return g + 2 * self.n + self.clause_count + self.n * (self.n - 1)
        return g + 1

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.size(p) for p in range(self.r))

    def literal_index(self, player: int, j: int, negated: bool) -> int:
        self._require_special(player)
        return self.gadget_shape[player] + 2 * j + int(negated)

    def clause_index(self, player: int, c: int) -> int:
        self._require_special(player)
        return self.gadget_shape[player] + 2 * self.n + c

    def pair_index(self, player: int, i: int, j: int) -> int:
        self._require_special(player)
        if i == j:
            raise InvalidInputError("pair variables need distinct indices")
        offset = i * (self.n - 1) + (j if j < i else j - 1)
        return self.gadget_shape[player] + 2 * self.n + self.clause_count + offset

    def delta_index(self, player: int) -> int:
        if self.is_special(player):
            raise InvalidInputError("special players have no delta strategy")
        return self.gadget_shape[player]

    def literal_indices(self, player: int) -> range:
        start = self.gadget_shape[player]
        return range(start, start + 2 * self.n)

    @cached_property
    def roles(self) -> tuple[tuple[Role, ...], ...]:
        table = []
        for player in range(self.r):
            roles = [Role(RoleKind.GADGET, t) for t in range(self.gadget_shape[player])]
            if self.is_special(player):
                for j in range(self.n):
                    roles.append(Role(RoleKind.LITERAL, j, negated=False))
                    roles.append(Role(RoleKind.LITERAL, j, negated=True))
                roles.extend(Role(RoleKind.CLAUSE, c) for c in range(self.clause_count))
                roles.extend(
                    Role(RoleKind.PAIR, i, j) for i in range(self.n) for j in range(self.n) if i != j
                )
            else:
                roles.append(Role(RoleKind.DELTA))
            table.append(tuple(roles))
        return tuple(table)

    def role(self, player: int, s: int) -> Role:
        return self.roles[player][s]

    def labels(self, gadget_labels: tuple[tuple[str, ...], ...]) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(_role_label(role, gadget_labels[player]) for role in self.roles[player])
            for player in range(self.r)
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "reduction",
            "players": self.r,
            "n": self.n,
            "clauses": self.clause_count,
            "gadget_shape": list(self.gadget_shape),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ReductionLayout:
        try:
            return cls(int(data["players"]), int(data["n"]), int(data["clauses"]), tuple(data["gadget_shape"]))
        except (KeyError, TypeError, ValueError):
            raise InvalidInputError("layout JSON needs 'players', 'n', 'clauses' and 'gadget_shape'") from None

    def _require_special(self, player: int) -> None:
        if not self.is_special(player):
            raise InvalidInputError(f"player {player} is not a special player")


def _role_label(role: Role, gadget_labels: tuple[str, ...]) -> str:
    if role.kind is RoleKind.GADGET:
        return f"gad:{gadget_labels[role.index]}"
    if role.kind is RoleKind.LITERAL:
        return f"lit:{'-' if role.negated else '+'}{role.index}"
    if role.kind is RoleKind.CLAUSE:
        return f"cls:{role.index}"
    if role.kind is RoleKind.PAIR:
        return f"var:{role.index},{role.other}"
    return "delta"


def _kronecker(r: int, i: int) -> tuple[int, ...]:
    return tuple(int(p == i) for p in range(r))


def reduction_utility(
    layout: ReductionLayout, gadget: Game, formula: CnfFormula, s: PureProfile
) -> tuple[tuple[int, ...], str]:
    """Utility vector of a pure profile and the case that produced it."""
    r = layout.r
    roles = [layout.role(p, s[p]) for p in range(r)]
    on_gadget = [p for p in range(r) if roles[p].kind is RoleKind.GADGET]

    if len(on_gadget) == r:
        return tuple(int(u) for u in gadget.utility(tuple(role.index for role in roles))), "7"
    if len(on_gadget) > 1:
        return tuple(int(p in on_gadget) for p in range(r)), "8"
    if len(on_gadget) == 1:
        i = on_gadget[0]
        if not layout.is_special(i):
            return _kronecker(r, i), "9"
        opponent = roles[1 - i]
        if opponent.kind in (RoleKind.CLAUSE, RoleKind.PAIR) or (
            opponent.kind is RoleKind.LITERAL and opponent.index in (0, 1)
        ):
            return _kronecker(r, i), "10"
        return (0,) * r, "11"

    # nobody on the gadget: every non-special player is on delta
    rest = (1,) * (r - 2)
    a, b = roles[0], roles[1]
    if a.kind is RoleKind.LITERAL and b.kind is RoleKind.LITERAL:
        if a.index == b.index and a.negated != b.negated:
            return (0, 0) + rest, "1"
        d = cyclic_index_diff(a.index, b.index, layout.n)
        if d in (0, 1):
            return (1, 0) + rest, "2"
        if d in (2, 3):
            return (0, 1) + rest, "3"
        return (0, 0) + rest, "4"
    if a.kind is RoleKind.PAIR and b.kind is RoleKind.LITERAL and b.index in (a.index, a.other):
        return (1, 0) + rest, "5a"
    if a.kind is RoleKind.LITERAL and b.kind is RoleKind.PAIR and a.index in (b.index, b.other):
        return (0, 1) + rest, "5b"
    if a.kind is RoleKind.CLAUSE and b.kind is RoleKind.LITERAL and -b.dimacs in formula.clauses[a.index]:
        return (1, 0) + rest, "6a"
    if a.kind is RoleKind.LITERAL and b.kind is RoleKind.CLAUSE and -a.dimacs in formula.clauses[b.index]:
        return (0, 1) + rest, "6b"
    return (0,) * r, "11"


def build_reduction(gadget: Game, formula: CnfFormula, r: int | None = None) -> tuple[Game, ReductionLayout]:
    r = gadget.player_count if r is None else r
    if r != gadget.player_count:
        raise InvalidInputError(f"gadget has {gadget.player_count} players, reduction asked for {r}")
    structure = check_structure(gadget)
    if not structure.win_lose:
        raise InvalidInputError("gadget is not win-lose")
    if not structure.pup:
        raise InvalidInputError("gadget lacks the positive utility property")
    check_cnf(formula, require_3sat=True, min_vars=4)
    layout = ReductionLayout(r, formula.var_count, len(formula.clauses), gadget.shape)
    labels = layout.labels(gadget.strategy_labels)
    game = Game.from_function(labels, lambda s: reduction_utility(layout, gadget, formula, s)[0])
    logger.info("reduction game with shape %s (n=%d, %d clauses)", game.shape, layout.n, layout.clause_count)
    return game, layout


def literal_equilibrium(layout: ReductionLayout, gamma: Assignment) -> MixedProfile:
    """Special players uniform on gamma's true literals, everyone else pure on delta."""
    if gamma.n != layout.n:
        raise InvalidInputError(f"assignment over {gamma.n} variables, layout has n={layout.n}")
    p = Fraction(1, layout.n)
    dists = []
    for player in range(layout.r):
        dist = [Fraction(0)] * layout.size(player)
        if layout.is_special(player):
            for j, value in enumerate(gamma.values):
                dist[layout.literal_index(player, j, not value)] = p
        else:
            dist[layout.delta_index(player)] = Fraction(1)
        dists.append(tuple(dist))
    return MixedProfile(tuple(dists))


def embed_gadget_profile(layout: ReductionLayout, sigma_hat: MixedProfile) -> MixedProfile:
    if sigma_hat.shape != layout.gadget_shape:
        raise InvalidInputError(f"gadget profile shape {sigma_hat.shape} does not match {layout.gadget_shape}")
    dists = []
    for player, dist in enumerate(sigma_hat.distributions):
        padding = (Fraction(0),) * (layout.size(player) - len(dist))
        dists.append(tuple(dist) + padding)
    return MixedProfile(tuple(dists))


def is_gadget_profile(layout: ReductionLayout, sigma: MixedProfile) -> bool:
    return all(
        layout.role(p, s).kind is RoleKind.GADGET for p in range(layout.r) for s in sigma.support(p)
    )


def induced_assignment(layout: ReductionLayout, sigma: MixedProfile) -> Assignment | None:
    """The assignment named by special-player supports lying in L with one literal per index."""
    supports = [sigma.support(p) for p in SPECIAL_PLAYERS]
    if supports[0] != supports[1]:
        return None
    roles = [layout.role(0, s) for s in supports[0]]
    if any(role.kind is not RoleKind.LITERAL for role in roles):
        return None
    if sorted(role.index for role in roles) != list(range(layout.n)):
        return None
    values = [False] * layout.n
    for role in roles:
        values[role.index] = not role.negated
    return Assignment(tuple(values))


def is_literal_profile(layout: ReductionLayout, sigma: MixedProfile) -> bool:
    if induced_assignment(layout, sigma) is None:
        return False
    return all(sigma.support(p) == (layout.delta_index(p),) for p in range(2, layout.r))
