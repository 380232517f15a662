from fractions import Fraction

import pytest
from hypothesis import settings

from games import Game

settings.register_profile("winlose", derandomize=True, deadline=None, max_examples=40)
settings.load_profile("winlose")


@pytest.fixture
def matching_pennies() -> Game:
    return Game.from_bimatrix([[1, 0], [0, 1]], [[0, 1], [1, 0]])


@pytest.fixture
def coordination() -> Game:
    return Game.from_bimatrix([[1, 0], [0, 1]], [[1, 0], [0, 1]])


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)
