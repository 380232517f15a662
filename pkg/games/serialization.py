import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from arith import QuadExt, Scalar, format_rational, parse_rational
from errors import InvalidInputError

from .game import Game
from .profile import FieldTag, MixedProfile


def game_to_json(g: Game) -> dict[str, Any]:
    def nest(prefix: tuple[int, ...]) -> list:
        if len(prefix) == g.player_count:
            return [format_rational(u) for u in g.utility(prefix)]
        return [nest(prefix + (s,)) for s in range(g.shape[len(prefix)])]

    return {
        "players": g.player_count,
        "strategies": [list(labels) for labels in g.strategy_labels],
        "utilities": nest(()),
    }


def game_from_json(data: dict[str, Any]) -> Game:
    try:
        r = int(data["players"])
        labels = [[str(label) for label in player_labels] for player_labels in data["strategies"]]
        utilities = data["utilities"]
    except (KeyError, TypeError, ValueError):
        raise InvalidInputError("game JSON needs 'players', 'strategies' and 'utilities'") from None
    if len(labels) != r:
        raise InvalidInputError(f"'players' is {r} but {len(labels)} strategy lists were given")

    def leaf(profile: tuple[int, ...]) -> tuple[Fraction, ...]:
        node = utilities
        try:
            for s in profile:
                node = node[s]
        except (IndexError, TypeError):
            raise InvalidInputError(f"utility table has no entry for profile {profile}") from None
        if not isinstance(node, list) or len(node) != r:
            raise InvalidInputError(f"utility entry for {profile} must be a list of {r} scalars")
        return tuple(parse_rational(u) for u in node)

    return Game.from_function(labels, leaf)


def scalar_to_json(x: Scalar) -> str | dict[str, str]:
    if isinstance(x, QuadExt):
        return x.to_json() if not x.is_rational else format_rational(x.a)
    return format_rational(x)


def scalar_from_json(value: Any) -> Scalar:
    if isinstance(value, dict):
        return QuadExt.from_json(value)
    return parse_rational(value)


def profile_to_json(g: Game, sigma: MixedProfile) -> dict[str, Any]:
    sigma.check_shape(g)
    return {
        "field": sigma.field_tag.value,
        "distributions": [
            {g.strategy_labels[i][s]: scalar_to_json(dist[s]) for s in sigma.support(i)}
            for i, dist in enumerate(sigma.distributions)
        ],
    }


def profile_from_json(g: Game, data: dict[str, Any]) -> MixedProfile:
    try:
        field = FieldTag(data.get("field", FieldTag.RATIONAL.value))
        dists = data["distributions"]
    except (KeyError, ValueError, AttributeError):
        raise InvalidInputError("profile JSON needs 'field' and 'distributions'") from None
    if len(dists) != g.player_count:
        raise InvalidInputError(f"profile has {len(dists)} distributions, game has {g.player_count} players")
    vectors = []
    for i, dist in enumerate(dists):
        vector: list[Scalar] = [Fraction(0)] * g.shape[i]
        for label, value in dist.items():
            vector[g.label_index(i, label)] = scalar_from_json(value)
        vectors.append(vector)
    sigma = MixedProfile.from_vectors(vectors)
    if field is FieldTag.RATIONAL and sigma.field_tag is FieldTag.QUAD_EXT:
        raise InvalidInputError("profile declared rational but has irrational entries")
    return sigma


def read_json(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: invalid JSON ({exc})") from None


def write_json(path: Path, data: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
        f.write("\n")


def read_game(path: Path) -> Game:
    return game_from_json(read_json(path))


def write_game(path: Path, g: Game) -> None:
    write_json(path, game_to_json(g))
