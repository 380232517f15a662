import logging

from errors import InvalidInputError
from games import Game

from .gadgets import diagonal_matrix
from .symmetrization import GhrLayout

logger = logging.getLogger(__name__)


def diagonal_labels(k: int) -> tuple[str, ...]:
    return tuple(f"diag:{j}" for j in range(1, k + 1))


def diagonal_embed(sym_g: Game, layout: GhrLayout, k: int) -> Game:
    """Append k strategies t_1..t_k playing the diagonal game against each other."""
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    if not sym_g.is_symmetric:
        raise InvalidInputError("diagonal embedding needs a symmetric game")
    if sym_g.shape[0] != layout.size:
        raise InvalidInputError("layout does not match the game")
    literals = set(layout.literal_indices())
    if not literals:
        raise InvalidInputError("layout has no literal strategies (L and its mirror)")
    m = layout.size
    d = diagonal_matrix(k)
    row, _ = sym_g.matrices

    def utility(s):
        s1, s2 = s
        if s1 < m and s2 < m:
            return row[s1][s2], row[s2][s1]
        if s1 >= m and s2 >= m:
            j, l = s1 - m, s2 - m
            return d[j][l], d[l][j]
        plain = s1 if s1 < m else s2
        if plain in literals:
            return 0, 0
        # the diagonal strategy wins against anything outside L and L'
        return (0, 1) if s1 == plain else (1, 0)

    labels = sym_g.strategy_labels[0] + diagonal_labels(k)
    game = Game.from_function((labels, labels), utility)
    logger.info("embedded D_%d next to %d strategies", k, m)
    return game
