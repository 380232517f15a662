import random
from fractions import Fraction

import pytest

from constructions import CompletedGame, GadgetId, GadgetKind, PureNE, build_gadget, pup_complete
from errors import InvalidInputError
from games import Game, MixedProfile, check_structure, is_nash
from games.generators import random_win_lose_game
from solvers import enumerate_ne_bimatrix, enumerate_pure_ne


@pytest.fixture
def zero_column_game() -> Game:
    # matching pennies on rows/cols {0, 1}; column 2 pays the row player nothing
    return Game.from_bimatrix(
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 1, 0], [1, 0, 0], [1, 0, 0]],
    )


def test_pure_equilibrium_short_circuits(coordination):
    assert pup_complete(coordination) == PureNE((0, 0))


def test_game_with_pup_is_returned_unchanged(matching_pennies):
    result = pup_complete(matching_pennies)
    assert result == CompletedGame(matching_pennies, extended=False)


def test_completion_adds_one_strategy(zero_column_game):
    assert not check_structure(zero_column_game).pup
    result = pup_complete(zero_column_game)
    assert isinstance(result, CompletedGame)
    assert result.extended
    g = result.game
    assert g.shape == (4, 4)
    assert g.strategy_labels[0][-1] == "new"
    assert check_structure(g).pup
    new = 3
    assert g.utility((new, 2)) == (1, 0)
    assert g.utility((new, 0)) == (0, 1)
    assert g.utility((1, new)) == (1, 0)
    assert g.utility((new, new)) == (0, 0)
    assert g.utility((0, 1)) == zero_column_game.utility((0, 1))


def test_completion_keeps_the_equilibrium(zero_column_game):
    half = Fraction(1, 2)
    original = MixedProfile(((half, half, 0), (half, half, 0)))
    assert is_nash(zero_column_game, original)
    padded = MixedProfile(((half, half, 0, 0), (half, half, 0, 0)))
    assert is_nash(pup_complete(zero_column_game).game, padded)


def test_completion_preserves_the_equilibrium_set():
    rng = random.Random(11)
    compared = 0
    games = 0
    while games < 40:
        g = random_win_lose_game(3, 3, rng, require_pup=False)
        if enumerate_pure_ne(g):
            continue
        games += 1
        result = pup_complete(g)
        assert isinstance(result, CompletedGame) and result.extended
        assert check_structure(result.game).pup
        original = enumerate_ne_bimatrix(g)
        completed = enumerate_ne_bimatrix(result.game)
        if original.degenerate or completed.degenerate:
            continue
        compared += 1
        restricted = set()
        for sigma in completed.equilibria:
            x, y = sigma.distributions
            assert x[-1] == 0 and y[-1] == 0
            restricted.add((x[:-1], y[:-1]))
        assert restricted == {sigma.distributions for sigma in original.equilibria}
    assert compared > 0


def test_fresh_label_avoids_clashes():
    g = Game.from_bimatrix(
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 1, 0], [1, 0, 0], [1, 0, 0]],
        labels=(("a", "b", "new"), ("x", "y", "z")),
    )
    completed = pup_complete(g).game
    assert completed.strategy_labels == (("a", "b", "new", "new'"), ("x", "y", "z", "new"))


def test_completion_preconditions():
    with pytest.raises(InvalidInputError):
        pup_complete(Game.from_bimatrix([[2, 0]], [[0, 1]]))
    with pytest.raises(InvalidInputError):
        pup_complete(build_gadget(GadgetId(GadgetKind.G2)))
