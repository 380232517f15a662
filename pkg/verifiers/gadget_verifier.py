import random
from fractions import Fraction

from constructions import GadgetId, GadgetKind, build_gadget, known_equilibria
from constructions.gadgets import g2_equilibrium, g4_segment
from games import check_structure, is_nash, profile_utilities
from games.generators import random_rational_profile
from games.properties import PureParetoDominated, PureStrongParetoDominated, Uniform
from solvers import (
    enumerate_ne_bimatrix,
    enumerate_pure_ne,
    enumerate_symmetric_ne,
    enumerate_uniform_ne,
    find_identical_strategy_ne,
)

from .base import Verifier


class GadgetVerifier(Verifier):
    """Verifica as afirmações finitamente checáveis de cada gadget."""

    def __init__(self, gadget: GadgetId, samples: int = 2_000, seed: int = 0, jobs: int | None = None):
        super().__init__()
        self.gadget = gadget
        self.samples = samples
        self.seed = seed
        self.jobs = jobs
        self.name = f"gadget-{gadget}"
        self.game = build_gadget(gadget)

    def _run_checks(self) -> None:
        structure = check_structure(self.game)
        self.check("win-lose", structure.win_lose)
        self.check("positive utility property", structure.pup)
        handler = {
            GadgetKind.G1: self._check_g1,
            GadgetKind.G2: self._check_g2,
            GadgetKind.G3: self._check_g3,
            GadgetKind.G4: self._check_g4,
            GadgetKind.G5: self._check_g5,
        }[self.gadget.kind]
        handler()

    def _oracle(self):
        result = enumerate_ne_bimatrix(self.game, jobs=self.jobs)
        self.check("oracle non-degenerate", not result.degenerate, f"{result.supports_scanned} supports scanned")
        return result

    def _check_g1(self) -> None:
        h = self.gadget.param
        result = self._oracle()
        self.check("exactly one equilibrium", result.count == 1, f"found {result.count}")
        if result.count != 1:
            return
        sigma = result.equilibria[0]
        self.check("matches the closed form", result.equilibria == known_equilibria(self.gadget))
        self.check("fully mixed", all(len(s) == h for s in sigma.supports))
        self.check("uniform", Uniform().holds(self.game, sigma))
        utilities = profile_utilities(self.game, sigma)
        self.check(f"utilities equal 1/{h}", utilities == (Fraction(1, h),) * 2, f"got {utilities}")
        if h == 1:
            self.check("Pareto-optimal against pure profiles", not PureParetoDominated().holds(self.game, sigma))
            self.check(
                "strongly Pareto-optimal against pure profiles",
                not PureStrongParetoDominated().holds(self.game, sigma),
            )

    def _check_g2(self) -> None:
        pure = enumerate_pure_ne(self.game)
        self.check("no pure equilibrium", not pure, f"{len(pure)} pure equilibria, 12 profiles scanned")
        sigma = g2_equilibrium()
        check = is_nash(self.game, sigma)
        self.check(
            "closed-form sqrt(5) profile is an equilibrium",
            check.is_nash,
            "" if check else check.violation.describe(),
        )
        rng = random.Random(self.seed)
        accepted = sum(bool(is_nash(self.game, random_rational_profile(self.game, rng))) for _ in range(self.samples))
        self.check("random rational profiles refuted", accepted == 0, f"{accepted} of {self.samples} accepted")

    def _check_g3(self) -> None:
        row, col = self.game.matrices
        self.check(
            "one-sum",
            all(row[i][j] + col[i][j] == 1 for i in range(4) for j in range(4)),
        )
        uniform = enumerate_uniform_ne(self.game)
        self.check("no uniform equilibrium", not uniform, f"{len(uniform)} found over 225 support pairs")
        result = self._oracle()
        self.check("has an equilibrium", result.count > 0, f"oracle found {result.count}")

    def _check_g4(self) -> None:
        # o conjunto de equilíbrios é um segmento: o oráculo aborta a contagem
        result = enumerate_ne_bimatrix(self.game, jobs=self.jobs)
        self.check(
            "has an equilibrium",
            result.degenerate or result.count > 0,
            "positive-dimensional set" if result.degenerate else f"oracle found {result.count}",
        )
        segment = [g4_segment(Fraction(t, 8)) for t in range(5)]
        self.check("equilibrium segment", all(is_nash(self.game, s) for s in segment), "t = 0, 1/8, ..., 1/2")
        identical = find_identical_strategy_ne(self.game)
        self.check(
            "no equilibrium with identical strategies",
            identical is None,
            "" if identical is None else f"found {identical.distributions}",
        )
        pure = enumerate_pure_ne(self.game)
        self.check("no pure equilibrium", not pure)

    def _check_g5(self) -> None:
        k = self.gadget.param
        self.check("symmetric game", self.game.is_symmetric)
        result = self._oracle()
        self.check(f"exactly {k} equilibria", result.count == k, f"found {result.count}")
        self.check("all pure", all(s.is_pure for s in result.equilibria))
        self.check("matches the diagonal", result.equilibria == known_equilibria(self.gadget))
        self.check(
            "utility vector (1, 1)",
            all(profile_utilities(self.game, s) == (1, 1) for s in result.equilibria),
        )
        self.check(
            "none Pareto-dominated by a pure profile",
            not any(PureParetoDominated().holds(self.game, s) for s in result.equilibria),
        )
        symmetric = enumerate_symmetric_ne(self.game, jobs=self.jobs)
        self.check(f"{k} symmetric equilibria", symmetric.count == k, f"found {symmetric.count}")
