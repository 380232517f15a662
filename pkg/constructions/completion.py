import logging
from dataclasses import dataclass

from errors import InvariantViolation
from games import Game, PureProfile, check_structure
from solvers import enumerate_pure_ne

logger = logging.getLogger(__name__)

NEW_STRATEGY = "new"


@dataclass(frozen=True)
class PureNE:
    profile: PureProfile


@dataclass(frozen=True)
class CompletedGame:
    game: Game
    # False when the input already had the positive utility property
    extended: bool


def pup_complete(g: Game) -> PureNE | CompletedGame:
    """A pure equilibrium, or an equivalent win-lose game with the positive utility property."""
    g.require_bimatrix()
    g.require_win_lose()
    pure = enumerate_pure_ne(g)
    if pure:
        return PureNE(pure[0])
    structure = check_structure(g)
    if structure.pup:
        return CompletedGame(g, extended=False)

    row, col = g.matrices
    n1, n2 = g.shape
    zero_cols = {j for j in range(n2) if all(row[i][j] == 0 for i in range(n1))}
    zero_rows = {i for i in range(n1) if all(col[i][j] == 0 for j in range(n2))}

    def utility(s: PureProfile) -> tuple[int, int]:
        s1, s2 = s
        if s1 == n1 and s2 == n2:
            return 0, 0
        if s1 == n1:
            return (1, 0) if s2 in zero_cols else (0, 1)
        if s2 == n2:
            return (0, 1) if s1 in zero_rows else (1, 0)
        return row[s1][s2], col[s1][s2]

    labels = tuple(labels + (_fresh_label(labels),) for labels in g.strategy_labels)
    completed = Game.from_function(labels, utility)
    if not check_structure(completed).pup:
        raise InvariantViolation("completed game still lacks the positive utility property")
    logger.info("added one strategy per player: %d all-zero columns, %d all-zero rows", len(zero_cols), len(zero_rows))
    return CompletedGame(completed, extended=True)


def _fresh_label(labels: tuple[str, ...]) -> str:
    label = NEW_STRATEGY
    while label in labels:
        label += "'"
    return label
