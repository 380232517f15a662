import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arith import QuadExt
from constructions import GadgetId, GadgetKind, build_gadget
from constructions.gadgets import g2_equilibrium
from errors import InvalidInputError
from games import (
    FieldTag,
    Game,
    MixedProfile,
    check_structure,
    conditional_utilities,
    conditional_utility,
    expected_utility,
    is_nash,
    profile_utilities,
    pure_ne_from_zero_utility,
)
from games.generators import random_rational_profile, random_win_lose_game
from games.properties import (
    MaxProbAtMost,
    NonSymmetricProfile,
    NonUniform,
    PureParetoDominated,
    PureStrongParetoDominated,
    RationalProfile,
    SupportContains,
    SupportSizeAtLeast,
    SupportWithin,
    SymmetricProfile,
    TotalUtilityAtLeast,
    Uniform,
    evaluate_property,
)
from games.serialization import (
    game_from_json,
    game_to_json,
    profile_from_json,
    profile_to_json,
    read_game,
    write_game,
)
from solvers import enumerate_ne_bimatrix

seeds = st.integers(min_value=0, max_value=10_000)


def uniform2():
    return MixedProfile(((Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2))))


def test_game_validation():
    with pytest.raises(InvalidInputError):
        Game((("a", "a"), ("x",)), ((0, 0), (0, 0)))
    with pytest.raises(InvalidInputError):
        Game((("a",), ("x",)), ((0, 0), (0, 0)))
    with pytest.raises(InvalidInputError):
        Game.from_bimatrix([[1, 0]], [[1]])
    with pytest.raises(InvalidInputError):
        Game((("a",),), ((0,),))


def test_game_indexing(matching_pennies):
    g = matching_pennies
    assert g.shape == (2, 2)
    assert g.utility((1, 0)) == (0, 1)
    assert g.matrices[0] == ((1, 0), (0, 1))
    assert g.win_lose
    assert not g.is_symmetric
    assert g.label_index(1, "1") == 1
    with pytest.raises(InvalidInputError):
        g.label_index(0, "missing")


def test_three_player_strides():
    g = build_gadget(GadgetId(GadgetKind.G2))
    assert g.shape == (2, 2, 3)
    assert g.utility((1, 0, 2)) == (1, 0, 0)
    assert g.index((1, 1, 2)) == 11


def test_mixed_profile_validation():
    with pytest.raises(InvalidInputError):
        MixedProfile(((Fraction(3, 2), Fraction(-1, 2)), (Fraction(1),)))
    with pytest.raises(InvalidInputError):
        MixedProfile(((Fraction(1, 2), Fraction(1, 3)), (Fraction(1),)))
    sigma = MixedProfile(((QuadExt(1, 0),), (Fraction(1),)))
    assert isinstance(sigma.distributions[0][0], Fraction)
    assert sigma.field_tag is FieldTag.RATIONAL
    assert g2_equilibrium().field_tag is FieldTag.QUAD_EXT


def test_expected_utility_matching_pennies(matching_pennies):
    sigma = uniform2()
    assert profile_utilities(matching_pennies, sigma) == (Fraction(1, 2), Fraction(1, 2))
    assert conditional_utilities(matching_pennies, sigma, 0) == (Fraction(1, 2), Fraction(1, 2))
    assert is_nash(matching_pennies, sigma)


def test_nash_violation_witness(matching_pennies):
    check = is_nash(matching_pennies, MixedProfile.pure((2, 2), (0, 0)))
    assert not check
    v = check.violation
    assert (v.player, v.strategy, v.supported_strategy, v.gain) == (1, 1, 0, 1)
    assert v.describe() == "player 1, strategy 1 beats 0 by 1"


def test_uniform_profile_of_g4_is_refuted():
    g = build_gadget(GadgetId(GadgetKind.G4))
    check = is_nash(g, MixedProfile.uniform((3, 3), ((0, 1, 2), (0, 1, 2))))
    assert not check
    v = check.violation
    assert (v.player, v.strategy, v.supported_strategy, v.gain) == (0, 0, 1, Fraction(1, 3))
    assert v.describe() == "player 0, strategy 0 beats 1 by 1/3"


def test_g2_closed_form_is_nash_over_quadext():
    g = build_gadget(GadgetId(GadgetKind.G2))
    assert is_nash(g, g2_equilibrium())


def test_conditional_utility_range(matching_pennies):
    with pytest.raises(InvalidInputError):
        conditional_utility(matching_pennies, uniform2(), 0, 5)
    with pytest.raises(InvalidInputError):
        expected_utility(matching_pennies, uniform2(), 2)


def test_shape_mismatch_rejected(matching_pennies):
    sigma = MixedProfile.uniform((3, 2), ((0, 1, 2), (0, 1)))
    with pytest.raises(InvalidInputError):
        is_nash(matching_pennies, sigma)


@given(seeds)
def test_expected_utility_is_multilinear(seed):
    rng = random.Random(seed)
    g = random_win_lose_game(3, 3, rng)
    sigma = random_rational_profile(g, rng)
    for i in range(2):
        values = conditional_utilities(g, sigma, i)
        assert expected_utility(g, sigma, i) == sum(p * u for p, u in zip(sigma.distributions[i], values))


@given(seeds)
def test_three_player_multilinearity(seed):
    rng = random.Random(seed)
    g = build_gadget(GadgetId(GadgetKind.G2))
    sigma = random_rational_profile(g, rng)
    for i in range(3):
        values = conditional_utilities(g, sigma, i)
        assert expected_utility(g, sigma, i) == sum(p * u for p, u in zip(sigma.distributions[i], values))


def test_check_structure_finds_all_zero_counter():
    g = Game.from_bimatrix([[1, 0], [1, 0]], [[1, 1], [1, 1]])
    report = check_structure(g)
    assert report.win_lose
    assert not report.pup
    assert report.all_zero_counter_strategies == (((1,),), ())


def test_check_structure_pup(matching_pennies):
    report = check_structure(matching_pennies)
    assert report.pup
    assert report.all_zero_counter_strategies == ((), ())


def test_pure_ne_from_zero_utility():
    g = Game.from_bimatrix([[0, 0], [0, 0]], [[1, 0], [0, 0]])
    sigma = MixedProfile(((Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(0))))
    assert is_nash(g, sigma)
    assert pure_ne_from_zero_utility(g, sigma) == (0, 0)


def test_pure_ne_from_zero_utility_preconditions(matching_pennies):
    with pytest.raises(InvalidInputError):
        pure_ne_from_zero_utility(matching_pennies, uniform2())
    with pytest.raises(InvalidInputError):
        pure_ne_from_zero_utility(matching_pennies, MixedProfile.pure((2, 2), (0, 0)))


def test_profile_properties(matching_pennies):
    g, sigma = matching_pennies, uniform2()
    assert Uniform().holds(g, sigma)
    assert not NonUniform().holds(g, sigma)
    assert SymmetricProfile().holds(g, sigma)
    assert not NonSymmetricProfile().holds(g, sigma)
    assert MaxProbAtMost(Fraction(1, 2)).holds(g, sigma)
    assert SupportSizeAtLeast(2).holds(g, sigma)
    assert SupportContains((frozenset({0}), frozenset({1}))).holds(g, sigma)
    assert not SupportWithin((frozenset({0}), frozenset({0, 1}))).holds(g, sigma)
    assert TotalUtilityAtLeast(Fraction(1)).holds(g, sigma)
    assert RationalProfile().holds(g, sigma)
    assert not PureParetoDominated().holds(g, sigma)
    assert not PureStrongParetoDominated().holds(g, sigma)


def test_pareto_domination_by_pure_profile():
    g = Game.from_bimatrix([[1, 0], [0, 0]], [[1, 0], [0, 0]])
    sigma = MixedProfile.pure((2, 2), (1, 1))
    assert is_nash(g, sigma)
    assert PureParetoDominated().holds(g, sigma)
    assert PureStrongParetoDominated().holds(g, sigma)
    assert not PureParetoDominated().holds(g, MixedProfile.pure((2, 2), (0, 0)))


def test_irrational_profile_is_not_rational():
    g = build_gadget(GadgetId(GadgetKind.G2))
    assert not RationalProfile().holds(g, g2_equilibrium())
    assert NonUniform().holds(g, g2_equilibrium())


def test_evaluate_property_checks_shape(matching_pennies):
    with pytest.raises(InvalidInputError):
        evaluate_property(matching_pennies, MixedProfile.pure((3, 2), (0, 0)), Uniform())


def test_game_json_round_trip(tmp_path):
    g = build_gadget(GadgetId(GadgetKind.G2))
    assert game_from_json(game_to_json(g)) == g
    write_game(tmp_path / "g2.json", g)
    assert read_game(tmp_path / "g2.json") == g


def test_profile_json_round_trip_with_sqrt5():
    g = build_gadget(GadgetId(GadgetKind.G2))
    sigma = g2_equilibrium()
    data = profile_to_json(g, sigma)
    assert data["field"] == "quad_ext"
    assert profile_from_json(g, data) == sigma


def test_profile_json_rejects_irrational_declared_rational():
    g = build_gadget(GadgetId(GadgetKind.G2))
    data = profile_to_json(g, g2_equilibrium())
    data["field"] = "rational"
    with pytest.raises(InvalidInputError):
        profile_from_json(g, data)


def test_game_json_errors():
    with pytest.raises(InvalidInputError):
        game_from_json({"players": 2})
    with pytest.raises(InvalidInputError):
        game_from_json({"players": 2, "strategies": [["a"], ["b"]], "utilities": [[["1"]]]})


@given(seeds)
def test_random_game_pup_rejection_sampling(seed):
    g = random_win_lose_game(3, 3, random.Random(seed), require_pup=True)
    assert check_structure(g).pup


@given(seeds)
def test_equilibria_of_pup_games_pay_everyone(seed):
    g = random_win_lose_game(3, 3, random.Random(seed), require_pup=True)
    for sigma in enumerate_ne_bimatrix(g).equilibria:
        assert all(u > 0 for u in profile_utilities(g, sigma))


def _assert_witness_improves(g, sigma):
    check = is_nash(g, sigma)
    if check:
        return
    v = check.violation
    values = conditional_utilities(g, sigma, v.player)
    assert v.supported_strategy in sigma.support(v.player)
    assert v.gain > 0
    assert values[v.strategy] - values[v.supported_strategy] == v.gain
    moved = list(sigma.distributions[v.player])
    weight = moved[v.supported_strategy]
    moved[v.supported_strategy] = 0
    moved[v.strategy] += weight
    deviated = sigma.replace(v.player, moved)
    assert expected_utility(g, deviated, v.player) - expected_utility(g, sigma, v.player) == weight * v.gain


@given(seeds)
def test_violation_witness_is_a_profitable_deviation(seed):
    rng = random.Random(seed)
    g = random_win_lose_game(3, 4, rng)
    _assert_witness_improves(g, random_rational_profile(g, rng))
    three = build_gadget(GadgetId(GadgetKind.G2))
    _assert_witness_improves(three, random_rational_profile(three, rng))
