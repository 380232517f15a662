import itertools
import logging
import random
from fractions import Fraction

from concurrency import run_batches
from constructions import (
    RoleKind,
    build_reduction,
    embed_gadget_profile,
    is_gadget_profile,
    is_literal_profile,
    literal_equilibrium,
)
from constructions.reduction import ReductionLayout
from errors import InvalidInputError
from games import Game, MixedProfile, conditional_utility, is_nash
from games.generators import random_rational_profile
from sat import Assignment, CnfFormula
from settings import get_settings
from solvers import enumerate_ne_bimatrix

from .base import Verifier

logger = logging.getLogger(__name__)

MAX_VARS = 14


def gadget_equilibria(gadget: Game, known: tuple[MixedProfile, ...] | None = None, jobs: int | None = None):
    """Equilibria of the gadget: the closed form when given, the oracle for bimatrix gadgets."""
    if known is not None:
        return known, False
    if not gadget.is_bimatrix:
        raise InvalidInputError("equilibria of a multi-player gadget must be supplied")
    result = enumerate_ne_bimatrix(gadget, jobs=jobs)
    return result.equilibria, result.degenerate


def sweep_assignments(game: Game, layout: ReductionLayout, formula: CnfFormula, start: int, stop: int):
    """For each assignment in [start, stop): (bits, satisfied, is_nash, witness summary)."""
    rows = []
    for bits in range(start, stop):
        gamma = Assignment.from_int(bits, layout.n)
        satisfied = formula.evaluate(gamma)
        sigma = literal_equilibrium(layout, gamma)
        check = is_nash(game, sigma)
        witness = None
        if check.violation is not None:
            v = check.violation
            witness = (v.player, v.strategy, conditional_utility(game, sigma, v.player, v.strategy))
        rows.append((bits, satisfied, check.is_nash, witness))
    return rows


class ReductionVerifier(Verifier):
    """Verifica a equivalência entre satisfatibilidade e equilíbrios do jogo reduzido."""

    name = "reduction-check"

    def __init__(
        self,
        gadget: Game,
        formula: CnfFormula,
        gadget_ne: tuple[MixedProfile, ...] | None = None,
        samples: int = 1_000,
        seed: int = 0,
        jobs: int | None = None,
    ):
        super().__init__()
        if formula.var_count > MAX_VARS:
            raise InvalidInputError(f"assignment sweep needs n <= {MAX_VARS}, got {formula.var_count}")
        self.gadget = gadget
        self.formula = formula
        self.known_gadget_ne = gadget_ne
        self.samples = samples
        self.seed = seed
        self.jobs = max(1, jobs if jobs is not None else get_settings().jobs)
        self.game, self.layout = build_reduction(gadget, formula)

    def _run_checks(self) -> None:
        self._check_gadget_embedding()
        self._check_assignments()
        self._check_sampling()

    def _check_gadget_embedding(self) -> None:
        equilibria, degenerate = gadget_equilibria(self.gadget, self.known_gadget_ne, self.jobs)
        if degenerate:
            self.check("gadget oracle non-degenerate", False)
            return
        bad = [i for i, sigma in enumerate(equilibria) if not is_nash(self.game, embed_gadget_profile(self.layout, sigma))]
        self.check(
            "gadget equilibria embed as equilibria",
            not bad,
            f"{len(equilibria)} embedded" if not bad else f"failing: {bad}",
        )

    def _check_assignments(self) -> None:
        n = self.layout.n
        total = 1 << n
        parts = self.jobs if self.jobs > 1 else 1
        step = -(-total // parts)
        payloads = [(self.game, self.layout, self.formula, s, min(s + step, total)) for s in range(0, total, step)]
        rows = list(itertools.chain.from_iterable(run_batches(sweep_assignments, payloads, self.jobs)))

        mismatched = [bits for bits, satisfied, nash, _ in rows if satisfied != nash]
        accepted = sum(nash for _, _, nash, _ in rows)
        self.check(
            "literal profile is an equilibrium iff the assignment satisfies",
            not mismatched,
            f"{accepted} literal equilibria accepted" if not mismatched else f"mismatch on assignments {mismatched}",
        )

        three = Fraction(3, n)
        bad_witness = []
        for bits, satisfied, _, witness in rows:
            if satisfied:
                continue
            gamma = Assignment.from_int(bits, n)
            if witness is None:
                bad_witness.append(bits)
                continue
            player, strategy, value = witness
            role = self.layout.role(player, strategy) if self.layout.is_special(player) else None
            if (
                role is None
                or role.kind is not RoleKind.CLAUSE
                or role.index not in self.formula.unsatisfied_clauses(gamma)
                or value != three
            ):
                bad_witness.append(bits)
        self.check(f"unsatisfied clause deviation earns 3/{n}", not bad_witness, f"bad witnesses: {bad_witness}" if bad_witness else "")

    def _check_sampling(self) -> None:
        rng = random.Random(self.seed)
        outside = 0
        for _ in range(self.samples):
            sigma = random_rational_profile(self.game, rng, max_support=3)
            if is_nash(self.game, sigma) and not (
                is_gadget_profile(self.layout, sigma) or is_literal_profile(self.layout, sigma)
            ):
                outside += 1
        self.check("random profiles outside both families refuted", outside == 0, f"{outside} of {self.samples} accepted")
