import itertools
import logging

from errors import InvalidInputError
from games import Game, MixedProfile, PureProfile, is_nash
from settings import get_settings

from .support_enumeration import all_supports

logger = logging.getLogger(__name__)


def enumerate_pure_ne(g: Game) -> list[PureProfile]:
    """Pure profiles with no improving unilateral pure deviation, any number of players."""
    result = []
    for profile in g.profiles():
        stable = True
        for i in range(g.player_count):
            current = g.utility(profile)[i]
            base = g.index(profile) - profile[i] * g.stride(i)
            if any(g.table[base + t * g.stride(i)][i] > current for t in range(g.shape[i])):
                stable = False
                break
        if stable:
            result.append(profile)
    return result


def enumerate_uniform_ne(g: Game, cap: int | None = None) -> list[MixedProfile]:
    """Uniform distributions on every nonempty support pair that pass the Nash test."""
    g.require_bimatrix()
    cap = get_settings().uniform_cap if cap is None else cap
    if max(g.shape) > cap:
        raise InvalidInputError(f"uniform enumeration: {g.shape} exceeds the cap of {cap}")
    found = []
    scanned = 0
    for S, T in itertools.product(all_supports(g.shape[0]), all_supports(g.shape[1])):
        scanned += 1
        sigma = MixedProfile.uniform(g.shape, (S, T))
        if is_nash(g, sigma):
            found.append(sigma)
    logger.info("uniform enumeration: %d of %d support pairs are equilibria", len(found), scanned)
    return sorted(found, key=MixedProfile.sort_key)
