"""Prebuilt scenario suites over the reduction game and its symmetrization.

Every scenario builds its candidate equilibria explicitly (gadget
embeddings, literal equilibria, balanced mixtures, diagonal pures) and
tests them with is_nash; nothing here enumerates the full mixed space.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from constructions import (
    GadgetId,
    GadgetKind,
    GhrLayout,
    build_gadget,
    build_reduction,
    diagonal_embed,
    embed_gadget_profile,
    ghr_image_equilibria,
    ghr_symmetrize,
    known_equilibria,
    literal_equilibrium,
)
from constructions.reduction import ReductionLayout
from errors import InvalidInputError
from games import Game, MixedProfile, is_nash, profile_utilities
from games.properties import (
    MaxProbAtMost,
    MaxUtilityAtMost,
    MinUtilityAtLeast,
    NonUniform,
    PureParetoDominated,
    PureStrongParetoDominated,
    RationalProfile,
    SupportSizeAtLeast,
    SupportSizeAtMost,
    SymmetricProfile,
    Uniform,
)
from sat import Assignment, CnfFormula, SatCount, count_sat

from .base import Verifier
from .reduction_verifier import MAX_VARS, gadget_equilibria, sweep_assignments

logger = logging.getLogger(__name__)

# satisfiable, #phi = 10
DEFAULT_FORMULA = CnfFormula.of(
    5,
    [
        (1, 2, 3),
        (-1, -2, 3),
        (-3, 4, 5),
        (-3, -4, -5),
        (1, -2, -4),
        (-1, 2, 5),
    ],
)

GADGET = "gadget"
LITERAL = "literal"
NULL = "null"


class ScenarioKind(str, Enum):
    GROUP1 = "group1"
    GROUP2 = "group2"
    GROUP3 = "group3"
    GROUP4 = "group4"
    SYMMETRIC_WITNESS = "symmetric_nash_witness"
    RATIONAL_WITNESS = "rational_nash_witness"


@dataclass(frozen=True)
class ScenarioId:
    kind: ScenarioKind
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ScenarioKind.GROUP4:
            if self.k is None or self.k < 1:
                raise InvalidInputError("group4 needs k >= 1")
        elif self.k is not None:
            raise InvalidInputError(f"{self.kind.value} takes no k")

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> ScenarioId:
        """Accepts "group4:3", "group4(3)", or a bare name with k passed separately."""
        match = re.fullmatch(r"\s*([a-z_0-9]+?)\s*(?:[:(]\s*(\d+)\s*\)?)?\s*", text.lower())
        if not match:
            raise InvalidInputError(f"unknown scenario {text!r}")
        try:
            kind = ScenarioKind(match.group(1))
        except ValueError:
            names = ", ".join(kind.value for kind in ScenarioKind)
            raise InvalidInputError(f"unknown scenario {text!r}; expected one of {names}") from None
        if match.group(2):
            k = int(match.group(2))
        return cls(kind, k)

    def __str__(self) -> str:
        return self.kind.value if self.k is None else f"{self.kind.value}({self.k})"


@dataclass(frozen=True)
class BaseEquilibrium:
    kind: str
    label: str
    profile: MixedProfile


@dataclass(frozen=True)
class Candidate:
    """A balanced mixture together with the kinds of the pair it came from."""

    label: str
    kinds: tuple[str, str]
    profile: MixedProfile

    @property
    def involves_gadget(self) -> bool:
        return GADGET in self.kinds

    @property
    def literal_pair(self) -> bool:
        return self.kinds == (LITERAL, LITERAL)

    @property
    def null_literal(self) -> bool:
        return self.kinds == (NULL, LITERAL)

    @property
    def gadget_literal(self) -> bool:
        return GADGET in self.kinds and LITERAL in self.kinds


@dataclass(frozen=True)
class Family:
    game: Game
    layout: ReductionLayout
    base: tuple[BaseEquilibrium, ...]
    symmetrized: Game
    ghr_layout: GhrLayout
    candidates: tuple[Candidate, ...]
    sat: SatCount


def _bits(gamma: Assignment) -> str:
    return "".join("1" if v else "0" for v in gamma.values)


def _pad(sigma: MixedProfile, extra: int) -> MixedProfile:
    zeros = (Fraction(0),) * extra
    return MixedProfile(tuple(tuple(dist) + zeros for dist in sigma.distributions))


class ScenarioVerifier(Verifier):
    """Reproduz as tabelas de propriedades de cada grupo sobre candidatos construídos."""

    header = "constructive verification"

    def __init__(self, scenario: ScenarioId, formula: CnfFormula | None = None, jobs: int | None = None):
        super().__init__()
        self.scenario = scenario
        self.formula = formula or DEFAULT_FORMULA
        if self.formula.var_count > MAX_VARS:
            raise InvalidInputError(f"scenarios need n <= {MAX_VARS}, got {self.formula.var_count}")
        self.jobs = jobs
        self.name = f"scenario-{scenario}"

    @property
    def n(self) -> int:
        return self.formula.var_count

    def _run_checks(self) -> None:
        runner = {
            ScenarioKind.GROUP1: self._group1,
            ScenarioKind.GROUP2: self._group2,
            ScenarioKind.GROUP3: self._group3,
            ScenarioKind.GROUP4: self._group4,
            ScenarioKind.SYMMETRIC_WITNESS: self._symmetric_witness,
            ScenarioKind.RATIONAL_WITNESS: self._rational_witness,
        }[self.scenario.kind]
        runner()

    # -- helpers ---------------------------------------------------------

    def _expect(
        self, name: str, candidates: list[Candidate], predicate: Callable[[MixedProfile], bool]
    ) -> None:
        if not candidates:
            self.skip(name, "no candidates")
            return
        bad = [c.label for c in candidates if not predicate(c.profile)]
        self.check(name, not bad, f"{len(candidates)} candidates" if not bad else f"failing: {', '.join(bad[:5])}")

    def _utilities_are(self, game: Game, value: Fraction) -> Callable[[MixedProfile], bool]:
        return lambda sigma: all(u == value for u in profile_utilities(game, sigma))

    def _family(self, gadget_id: GadgetId) -> Family | None:
        gadget = build_gadget(gadget_id)
        game, layout = build_reduction(gadget, self.formula)
        gadget_ne, degenerate = gadget_equilibria(gadget, known_equilibria(gadget_id), self.jobs)
        if degenerate:
            self.check(f"{gadget_id} equilibria known", False, "oracle reported degeneracy")
            return None
        sat = count_sat(self.formula, witnesses=True, jobs=self.jobs)
        base = [
            BaseEquilibrium(GADGET, f"gad#{i}", embed_gadget_profile(layout, sigma))
            for i, sigma in enumerate(gadget_ne)
        ]
        base += [
            BaseEquilibrium(LITERAL, f"lit:{_bits(gamma)}", literal_equilibrium(layout, gamma))
            for gamma in sat.witnesses
        ]
        bad = [b.label for b in base if not is_nash(game, b.profile)]
        self.check(
            "gadget and literal equilibria of the reduction",
            not bad,
            f"{len(gadget_ne)} gadget + {sat.count} literal" if not bad else f"failing: {bad}",
        )

        symmetrized, ghr_layout = ghr_symmetrize(game)
        images = ghr_image_equilibria(game, [b.profile for b in base])
        candidates = []
        for image in images:
            rho = NULL if image.rho_index is None else base[image.rho_index].kind
            tau = base[image.tau_index]
            rho_label = NULL if image.rho_index is None else base[image.rho_index].label
            label = f"{tau.label}*{rho_label}" if image.swapped else f"{rho_label}*{tau.label}"
            candidates.append(Candidate(label, (rho, tau.kind), image.profile))

        total = len(base)
        distinct = {c.profile.distributions for c in candidates}
        self.check(
            "N(N+2) distinct balanced mixtures",
            len(distinct) == len(candidates) == total * (total + 2),
            f"N={total}, {len(distinct)} distinct",
        )
        self._expect("balanced mixtures are equilibria", candidates, lambda sigma: bool(is_nash(symmetrized, sigma)))
        logger.info("%s: %d base equilibria, %d mixtures", self.name, total, len(candidates))
        return Family(game, layout, tuple(base), symmetrized, ghr_layout, tuple(candidates), sat)

    # -- groups ----------------------------------------------------------

    def _group1(self) -> None:
        family = self._family(GadgetId(GadgetKind.G1, 1))
        if family is None:
            return
        n, g = self.n, family.symmetrized
        cands = list(family.candidates)
        gadget_only = [c for c in cands if LITERAL not in c.kinds]
        utilities = sorted(profile_utilities(g, c.profile) for c in gadget_only)
        half, one = Fraction(1, 2), Fraction(1)
        self.check(
            "gadget mixtures pay (1/2,1/2), (1,1), (1,1)",
            utilities == [(half, half), (one, one), (one, one)],
            str([tuple(str(u) for u in vec) for vec in utilities]),
        )
        self._expect("gadget mixtures pay every player at least 1/2", gadget_only, lambda s: MinUtilityAtLeast(half).holds(g, s))
        if family.sat.count == 0:
            self.check("only gadget mixtures when unsatisfiable", len(cands) == 3, f"{len(cands)} candidates")
            return

        literal_pairs = [c for c in cands if c.literal_pair]
        self._expect(f"literal x literal pays 1/{n}", literal_pairs, self._utilities_are(g, Fraction(1, n)))
        self._expect(
            f"literal x literal has support {2 * n}",
            literal_pairs,
            lambda s: SupportSizeAtLeast(2 * n).holds(g, s) and SupportSizeAtMost(2 * n).holds(g, s),
        )
        self._expect(
            f"literal x literal probabilities at most 1/{2 * n}",
            literal_pairs,
            lambda s: MaxProbAtMost(Fraction(1, 2 * n)).holds(g, s),
        )

        null_literal = [c for c in cands if c.null_literal]
        self._expect(f"null * literal pays 2/{n}", null_literal, self._utilities_are(g, Fraction(2, n)))
        self._expect(
            f"null * literal has support {n}",
            null_literal,
            lambda s: SupportSizeAtLeast(n).holds(g, s) and SupportSizeAtMost(n).holds(g, s),
        )

        mixed = [c for c in cands if c.gadget_literal]
        self._expect(f"gadget x literal pays 2/{n + 2}", mixed, self._utilities_are(g, Fraction(2, n + 2)))
        self._expect(
            f"gadget x literal has support {n + 1}",
            mixed,
            lambda s: SupportSizeAtLeast(n + 1).holds(g, s) and SupportSizeAtMost(n + 1).holds(g, s),
        )
        self._expect("gadget x literal is non-uniform", mixed, lambda s: NonUniform().holds(g, s))

    def _group2(self) -> None:
        family = self._family(GadgetId(GadgetKind.G3))
        if family is None:
            return
        g = family.symmetrized
        cands = list(family.candidates)
        gadget_side = [c for c in cands if c.involves_gadget]
        self._expect("mixtures with the gadget are non-uniform", gadget_side, lambda s: NonUniform().holds(g, s))
        uniform = [c.label for c in cands if Uniform().holds(g, c.profile)]
        satisfiable = family.sat.count > 0
        self.check(
            "a uniform equilibrium exists iff satisfiable",
            bool(uniform) == satisfiable,
            f"{len(uniform)} uniform candidates, #phi={family.sat.count}",
        )
        if satisfiable:
            literal_side = [c for c in cands if c.literal_pair or c.null_literal]
            self._expect("literal mixtures are uniform", literal_side, lambda s: Uniform().holds(g, s))

    def _group3(self) -> None:
        n = self.n
        h = 2 * n + 1
        family = self._family(GadgetId(GadgetKind.G1, h))
        if family is None:
            return
        g = family.symmetrized
        cands = list(family.candidates)
        mixed = [c for c in cands if c.gadget_literal]
        self._expect(f"gadget x literal pays 2/{n + 2 * h}", mixed, self._utilities_are(g, Fraction(2, n + 2 * h)))
        self._expect(
            f"gadget x literal has support {n + h}",
            mixed,
            lambda s: SupportSizeAtLeast(n + h).holds(g, s) and SupportSizeAtMost(n + h).holds(g, s),
        )
        gadget_side = [c for c in cands if c.involves_gadget]
        self._expect(f"gadget mixtures pay at most 1/{h}", gadget_side, lambda s: MaxUtilityAtMost(Fraction(1, h)).holds(g, s))
        self._expect(f"gadget mixtures have support at least {h}", gadget_side, lambda s: SupportSizeAtLeast(h).holds(g, s))

        literal_pairs = [c for c in cands if c.literal_pair]
        self._expect(f"literal x literal pays 1/{n}", literal_pairs, self._utilities_are(g, Fraction(1, n)))
        small = [
            c.label
            for c in cands
            if MinUtilityAtLeast(Fraction(1, n)).holds(g, c.profile) and SupportSizeAtMost(2 * n).holds(g, c.profile)
        ]
        self.check(
            f"an equilibrium with utility >= 1/{n} and support <= {2 * n} exists iff satisfiable",
            bool(small) == (family.sat.count > 0),
            f"{len(small)} such candidates",
        )

    def _group4(self) -> None:
        k = self.scenario.k
        family = self._family(GadgetId(GadgetKind.G1, 2))
        if family is None:
            return
        sym = family.symmetrized
        m = sym.shape[0]
        embedded = diagonal_embed(sym, family.ghr_layout, k)
        self.check("embedded game is symmetric and win-lose", embedded.is_symmetric and embedded.win_lose)

        diagonal = [
            Candidate(f"diag:{s + 1}", (GADGET, GADGET), MixedProfile.pure(embedded.shape, (m + s, m + s)))
            for s in range(k)
        ]
        self._expect("diagonal profiles are equilibria", diagonal, lambda s: bool(is_nash(embedded, s)))
        self._expect("diagonal profiles pay (1,1)", diagonal, self._utilities_are(embedded, Fraction(1)))
        self._expect("diagonal profiles are symmetric", diagonal, lambda s: SymmetricProfile().holds(embedded, s))

        padded = [Candidate(c.label, c.kinds, _pad(c.profile, k)) for c in family.candidates]
        gadget_side = [c for c in padded if c.involves_gadget]
        self._expect(
            "gadget mixtures are broken by a diagonal strategy",
            gadget_side,
            lambda s: not is_nash(embedded, s),
        )
        literal_side = [c for c in padded if c.literal_pair or c.null_literal]
        survivors = [c for c in literal_side if is_nash(embedded, c.profile)]
        sharp = family.sat.count
        symmetric = [c for c in survivors if SymmetricProfile().holds(embedded, c.profile)]
        self.check(
            f"{k} + #phi(#phi+2) constructed equilibria survive",
            len(survivors) == len(literal_side) == sharp * (sharp + 2),
            f"{k} diagonal, {len(survivors)} literal",
        )
        self.check(f"#phi={sharp} symmetric literal equilibria", len(symmetric) == sharp, f"{len(symmetric)} symmetric")
        self.check(
            f"#phi(#phi+1)={sharp * (sharp + 1)} non-symmetric literal equilibria",
            len(survivors) - len(symmetric) == sharp * (sharp + 1),
            f"{len(survivors) - len(symmetric)} non-symmetric",
        )
        self._expect(
            "literal equilibria are Pareto-dominated by a diagonal profile",
            survivors,
            lambda s: PureParetoDominated().holds(embedded, s),
        )
        self._expect(
            "literal equilibria are strongly Pareto-dominated",
            survivors,
            lambda s: PureStrongParetoDominated().holds(embedded, s),
        )
        if sharp == 0:
            self._expect(
                "diagonal equilibria are not Pareto-dominated",
                diagonal,
                lambda s: not PureParetoDominated().holds(embedded, s),
            )

    # -- witnesses -------------------------------------------------------

    def _symmetric_witness(self) -> None:
        gadget_id = GadgetId(GadgetKind.G4)
        gadget = build_gadget(gadget_id)
        game, layout = build_reduction(gadget, self.formula)
        # endpoints of the equilibrium segment of G4
        gadget_ne = known_equilibria(gadget_id)
        embedded = [embed_gadget_profile(layout, sigma) for sigma in gadget_ne]
        self.check(
            "gadget equilibria embed as non-symmetric equilibria",
            bool(embedded) and all(is_nash(game, s) and not SymmetricProfile().holds(game, s) for s in embedded),
            f"{len(embedded)} gadget equilibria",
        )
        rows = sweep_assignments(game, layout, self.formula, 0, 1 << self.n)
        accepted = [bits for bits, _, nash, _ in rows if nash]
        mismatched = [bits for bits, satisfied, nash, _ in rows if satisfied != nash]
        self.check("literal profile is an equilibrium iff the assignment satisfies", not mismatched, f"{len(accepted)} accepted")
        symmetric = all(
            SymmetricProfile().holds(game, literal_equilibrium(layout, Assignment.from_int(bits, self.n)))
            for bits in accepted
        )
        satisfiable = count_sat(self.formula, jobs=self.jobs).count > 0
        self.check(
            "a symmetric equilibrium exists iff satisfiable",
            symmetric and bool(accepted) == satisfiable,
            "satisfiable" if satisfiable else "unsatisfiable",
        )

    def _rational_witness(self) -> None:
        gadget_id = GadgetId(GadgetKind.G2)
        gadget = build_gadget(gadget_id)
        game, layout = build_reduction(gadget, self.formula)
        irrational = embed_gadget_profile(layout, known_equilibria(gadget_id)[0])
        self.check("embedded irrational gadget equilibrium passes over Q(sqrt5)", bool(is_nash(game, irrational)))
        self.check("gadget equilibrium is irrational", not RationalProfile().holds(game, irrational))

        rows = sweep_assignments(game, layout, self.formula, 0, 1 << self.n)
        accepted = {Assignment.from_int(bits, self.n).values for bits, _, nash, _ in rows if nash}
        sat = count_sat(self.formula, witnesses=True, jobs=self.jobs)
        expected = {gamma.values for gamma in sat.witnesses}
        self.check(
            "rational literal equilibria match satisfying assignments one-to-one",
            accepted == expected,
            f"#phi={sat.count}, {len(accepted)} accepted",
        )
        self._expect(
            "literal equilibria are rational",
            [
                Candidate(f"lit:{_bits(Assignment(values))}", (LITERAL, LITERAL), literal_equilibrium(layout, Assignment(values)))
                for values in sorted(accepted)
            ],
            lambda s: RationalProfile().holds(game, s),
        )


def run_scenario(scenario: ScenarioId, formula: CnfFormula | None = None, jobs: int | None = None) -> ScenarioVerifier:
    verifier = ScenarioVerifier(scenario, formula, jobs)
    verifier.run()
    return verifier
