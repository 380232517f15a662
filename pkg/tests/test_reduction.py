import random
from fractions import Fraction

import pytest

from constructions import (
    GadgetId,
    GadgetKind,
    ReductionLayout,
    RoleKind,
    build_gadget,
    build_reduction,
    cyclic_index_diff,
    embed_gadget_profile,
    induced_assignment,
    is_gadget_profile,
    is_literal_profile,
    known_equilibria,
    literal_equilibrium,
    reduction_utility,
)
from errors import InvalidInputError
from games import Game, MixedProfile, is_nash
from sat import Assignment, CnfFormula, count_sat, random_3sat, unsatisfiable_3sat
from verifiers import DEFAULT_FORMULA, CheckStatus, ReductionVerifier
from verifiers.reduction_verifier import sweep_assignments

TRIVIAL = GadgetId(GadgetKind.G1, 1)


@pytest.fixture(scope="module")
def trivial_gadget() -> Game:
    return build_gadget(TRIVIAL)


@pytest.fixture(scope="module")
def layout() -> ReductionLayout:
    return ReductionLayout(2, 5, 6, (1, 1))


def test_layout_offsets(layout):
    assert layout.size(0) == 37
    assert layout.shape == (37, 37)
    assert layout.literal_index(0, 0, False) == 1
    assert layout.literal_index(1, 4, True) == 10
    assert layout.clause_index(0, 0) == 11
    assert layout.pair_index(0, 0, 1) == 17
    assert layout.pair_index(0, 1, 0) == 21
    assert layout.pair_index(0, 4, 3) == 36


def test_layout_roles_follow_offsets(layout):
    roles = layout.roles[0]
    assert len(roles) == 37
    assert roles[layout.pair_index(0, 2, 0)] == layout.role(0, 25)
    assert (roles[25].kind, roles[25].index, roles[25].other) == (RoleKind.PAIR, 2, 0)
    assert roles[layout.literal_index(0, 3, True)].dimacs == -4


def test_layout_errors(layout):
    with pytest.raises(InvalidInputError):
        layout.pair_index(0, 2, 2)
    with pytest.raises(InvalidInputError):
        ReductionLayout(3, 5, 6, (1, 1, 1)).literal_index(2, 0, False)
    with pytest.raises(InvalidInputError):
        layout.delta_index(0)
    with pytest.raises(InvalidInputError):
        ReductionLayout(2, 5, 6, (1,))


def test_layout_json_round_trip(layout):
    assert ReductionLayout.from_json(layout.to_json()) == layout
    with pytest.raises(InvalidInputError):
        ReductionLayout.from_json({"n": 5})


@pytest.mark.parametrize(
    "start, end, n, diff",
    [(0, 0, 5, 0), (3, 1, 5, 3), (4, 0, 5, 1), (1, 4, 5, 3)],
)
def test_cyclic_index_diff(start, end, n, diff):
    assert cyclic_index_diff(start, end, n) == diff


def test_cyclic_index_diff_range():
    with pytest.raises(InvalidInputError):
        cyclic_index_diff(5, 0, 5)
    with pytest.raises(InvalidInputError):
        cyclic_index_diff(0, 0, 0)


def two_player_cases(layout):
    lit = layout.literal_index
    return [
        ((0, 0), (1, 1), "7"),
        ((lit(0, 0, False), lit(1, 0, True)), (0, 0), "1"),
        ((lit(0, 1, False), lit(1, 1, False)), (1, 0), "2"),
        ((lit(0, 0, False), lit(1, 1, True)), (1, 0), "2"),
        ((lit(0, 0, False), lit(1, 2, False)), (0, 1), "3"),
        ((lit(0, 1, True), lit(1, 4, False)), (0, 1), "3"),
        ((lit(0, 0, False), lit(1, 4, False)), (0, 0), "4"),
        ((layout.pair_index(0, 0, 1), lit(1, 1, False)), (1, 0), "5a"),
        ((lit(0, 0, True), layout.pair_index(1, 0, 1)), (0, 1), "5b"),
        ((layout.clause_index(0, 0), lit(1, 0, True)), (1, 0), "6a"),
        ((lit(0, 2, True), layout.clause_index(1, 0)), (0, 1), "6b"),
        ((layout.clause_index(0, 0), lit(1, 0, False)), (0, 0), "11"),
        ((0, layout.clause_index(1, 3)), (1, 0), "10"),
        ((lit(0, 1, True), 0), (0, 1), "10"),
        ((0, lit(1, 2, False)), (0, 0), "11"),
        ((layout.pair_index(0, 0, 1), layout.pair_index(1, 1, 0)), (0, 0), "11"),
    ]


def test_two_player_utility_cases(trivial_gadget, layout):
    for profile, utility, case in two_player_cases(layout):
        assert reduction_utility(layout, trivial_gadget, DEFAULT_FORMULA, profile) == (utility, case), profile


def test_three_player_utility_cases():
    gadget = build_gadget(GadgetId(GadgetKind.G2))
    formula = CnfFormula.of(4, [(1, 2, 3), (-1, -2, -3)])
    game, layout = build_reduction(gadget, formula)
    assert game.shape == (24, 24, 4)
    lit = layout.literal_index
    delta = layout.delta_index(2)
    cases = [
        ((0, 0, 0), (1, 0, 1), "7"),
        ((0, 1, delta), (1, 1, 0), "8"),
        ((lit(0, 0, False), lit(1, 3, False), 2), (0, 0, 1), "9"),
        ((1, layout.clause_index(1, 1), delta), (1, 0, 0), "10"),
        ((0, lit(1, 2, False), delta), (0, 0, 0), "11"),
        ((lit(0, 2, False), lit(1, 2, False), delta), (1, 0, 1), "2"),
        ((lit(0, 2, False), lit(1, 2, True), delta), (0, 0, 1), "1"),
    ]
    for profile, utility, case in cases:
        assert reduction_utility(layout, gadget, formula, profile) == (utility, case), profile
        assert game.utility(profile) == utility


def test_build_reduction_labels(trivial_gadget):
    game, layout = build_reduction(trivial_gadget, DEFAULT_FORMULA)
    assert game.shape == (37, 37)
    assert game.win_lose
    labels = game.strategy_labels[0]
    assert labels[:3] == ("gad:0", "lit:+0", "lit:-0")
    assert labels[11] == "cls:0"
    assert labels[17] == "var:0,1"


def test_build_reduction_preconditions(trivial_gadget):
    with pytest.raises(InvalidInputError):
        build_reduction(trivial_gadget, CnfFormula.of(3, [(1, 2, 3)]))
    with pytest.raises(InvalidInputError):
        build_reduction(trivial_gadget, CnfFormula.of(4, [(1, 2)]))
    with pytest.raises(InvalidInputError):
        build_reduction(trivial_gadget, DEFAULT_FORMULA, r=3)
    no_pup = Game.from_bimatrix([[1, 0], [1, 0]], [[1, 1], [1, 1]])
    with pytest.raises(InvalidInputError):
        build_reduction(no_pup, DEFAULT_FORMULA)
    not_win_lose = Game.from_bimatrix([[2]], [[1]])
    with pytest.raises(InvalidInputError):
        build_reduction(not_win_lose, DEFAULT_FORMULA)


def test_literal_profile_is_nash_iff_satisfied(trivial_gadget):
    game, layout = build_reduction(trivial_gadget, DEFAULT_FORMULA)
    for bits in range(32):
        gamma = Assignment.from_int(bits, 5)
        sigma = literal_equilibrium(layout, gamma)
        assert bool(is_nash(game, sigma)) == DEFAULT_FORMULA.evaluate(gamma)
        assert induced_assignment(layout, sigma) == gamma
        assert is_literal_profile(layout, sigma)
        assert not is_gadget_profile(layout, sigma)


def test_unsatisfied_literal_profile_loses_to_a_clause(trivial_gadget):
    game, layout = build_reduction(trivial_gadget, DEFAULT_FORMULA)
    gamma = next(
        Assignment.from_int(bits, 5) for bits in range(32) if not DEFAULT_FORMULA.evaluate(Assignment.from_int(bits, 5))
    )
    check = is_nash(game, literal_equilibrium(layout, gamma))
    role = layout.role(check.violation.player, check.violation.strategy)
    assert role.kind is RoleKind.CLAUSE
    assert role.index in DEFAULT_FORMULA.unsatisfied_clauses(gamma)
    assert check.violation.gain == Fraction(1, 5)


def test_embedded_gadget_equilibrium(trivial_gadget):
    game, layout = build_reduction(trivial_gadget, DEFAULT_FORMULA)
    (sigma_hat,) = known_equilibria(TRIVIAL)
    sigma = embed_gadget_profile(layout, sigma_hat)
    assert sigma.shape == (37, 37)
    assert is_gadget_profile(layout, sigma)
    assert induced_assignment(layout, sigma) is None
    assert is_nash(game, sigma)
    with pytest.raises(InvalidInputError):
        embed_gadget_profile(layout, MixedProfile.pure((2, 2), (0, 0)))


def test_induced_assignment_needs_one_literal_per_index(layout):
    half = Fraction(1, 2)
    dist = [Fraction(0)] * 37
    dist[layout.literal_index(0, 0, False)] = half
    dist[layout.literal_index(0, 0, True)] = half
    sigma = MixedProfile((tuple(dist), tuple(dist)))
    assert induced_assignment(layout, sigma) is None


@pytest.mark.parametrize("formula", [DEFAULT_FORMULA, unsatisfiable_3sat(5)], ids=["satisfiable", "unsatisfiable"])
def test_reduction_verifier_passes(trivial_gadget, formula):
    verifier = ReductionVerifier(trivial_gadget, formula, gadget_ne=known_equilibria(TRIVIAL), samples=100, seed=1)
    verifier.run()
    assert verifier.passed, verifier.summary()
    assert all(entry.status is CheckStatus.PASSED for entry in verifier.entries)


def random_formula(seed: int) -> CnfFormula:
    rng = random.Random(seed)
    n = 4 + seed % 2
    formula = random_3sat(n, rng.randint(3, 12), rng)
    if seed % 3 == 0:
        # every sign pattern over 1, 2, 3 on top: unsatisfiable
        formula = CnfFormula(n, formula.clauses + unsatisfiable_3sat(n).clauses)
    return formula


@pytest.mark.parametrize("seed", range(24))
def test_literal_equilibria_count_satisfying_assignments(trivial_gadget, seed):
    formula = random_formula(seed)
    verifier = ReductionVerifier(trivial_gadget, formula, gadget_ne=known_equilibria(TRIVIAL), samples=40, seed=seed)
    rows = sweep_assignments(verifier.game, verifier.layout, formula, 0, 1 << formula.var_count)
    accepted = {bits for bits, _, nash, _ in rows if nash}
    sharp = count_sat(formula).count
    assert len(accepted) == sharp
    assert all(satisfied == nash for _, satisfied, nash, _ in rows)
    if seed % 3 == 0:
        assert sharp == 0
        assert not accepted
    verifier.run()
    assert verifier.passed, verifier.summary()


def test_reduction_verifier_with_degenerate_gadget_endpoints():
    gadget_id = GadgetId(GadgetKind.G4)
    verifier = ReductionVerifier(
        build_gadget(gadget_id), CnfFormula.of(4, [(1, 2, 3), (-1, -2, -4)]), gadget_ne=known_equilibria(gadget_id), samples=50
    )
    verifier.run()
    assert verifier.passed, verifier.summary()


def test_reduction_verifier_rejects_large_formulas(trivial_gadget):
    with pytest.raises(InvalidInputError):
        ReductionVerifier(trivial_gadget, CnfFormula.of(15, [(1, 2, 3)]))
