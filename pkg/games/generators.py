import random
from fractions import Fraction

from errors import InvalidInputError

from .game import Game
from .nash import has_pup
from .profile import MixedProfile


def random_win_lose_game(
    n1: int,
    n2: int,
    rng: random.Random,
    density: float = 0.5,
    require_pup: bool | None = None,
    max_tries: int = 10_000,
) -> Game:
    """Random win-lose bimatrix game; require_pup=True/False rejection-samples on PUP."""
    if n1 < 1 or n2 < 1:
        raise InvalidInputError("both players need at least one strategy")
    for _ in range(max_tries):
        row = [[int(rng.random() < density) for _ in range(n2)] for _ in range(n1)]
        col = [[int(rng.random() < density) for _ in range(n2)] for _ in range(n1)]
        g = Game.from_bimatrix(row, col)
        if require_pup is None or has_pup(g) == require_pup:
            return g
    raise InvalidInputError(f"no {n1}x{n2} game with pup={require_pup} after {max_tries} tries")


def random_distribution(n: int, rng: random.Random, max_support: int | None = None, grain: int = 12) -> tuple[Fraction, ...]:
    size = rng.randint(1, min(n, max_support or n))
    support = rng.sample(range(n), size)
    weights = [rng.randint(1, grain) for _ in support]
    total = sum(weights)
    dist = [Fraction(0)] * n
    for s, w in zip(support, weights):
        dist[s] = Fraction(w, total)
    return tuple(dist)


def random_rational_profile(g: Game, rng: random.Random, max_support: int | None = None) -> MixedProfile:
    return MixedProfile(tuple(random_distribution(n, rng, max_support) for n in g.shape))
