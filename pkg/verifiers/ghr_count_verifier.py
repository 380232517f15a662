from constructions import (
    BalancedMixtureInput,
    DecompositionCase,
    balanced_mixture,
    decompose_symmetric_ne,
    ghr_image_equilibria,
    ghr_symmetrize,
    recover_base_ne,
)
from errors import InvalidInputError, InvariantViolation
from games import Game, check_structure, is_nash, profile_utilities
from games.properties import NonUniform, SymmetricProfile, Uniform
from solvers import enumerate_ne_bimatrix

from .base import Verifier

MAX_BASE_STRATEGIES = 4


class GhrCountVerifier(Verifier):
    """Confere |NE(GHR(g))| = N (N + 2) e a bijeção das misturas balanceadas."""

    name = "ghr-count"

    def __init__(self, game: Game, jobs: int | None = None, max_base: int = MAX_BASE_STRATEGIES):
        super().__init__()
        game.require_bimatrix()
        game.require_win_lose()
        if max(game.shape) > max_base:
            raise InvalidInputError(f"base game {game.shape} exceeds {max_base} strategies per player")
        if not check_structure(game).pup:
            raise InvalidInputError("base game lacks the positive utility property")
        self.game = game
        self.jobs = jobs
        self.image, self.layout = ghr_symmetrize(game)
        # filled by run(); None when the oracle reports degeneracy
        self.base_count: int | None = None
        self.image_count: int | None = None
        self.degenerate = False

    def _run_checks(self) -> None:
        base = enumerate_ne_bimatrix(self.game, jobs=self.jobs)
        if base.degenerate:
            self.degenerate = True
            self.skip("count identity", "skipped(degenerate): base game")
            return
        image = enumerate_ne_bimatrix(self.image, jobs=self.jobs)
        if image.degenerate:
            self.degenerate = True
            self.skip("count identity", "skipped(degenerate): symmetrized game")
            return
        n, m = base.count, image.count
        self.base_count, self.image_count = n, m
        self.check("count identity N(N+2)", m == n * (n + 2), f"|NE(G)|={n}, |NE(GHR(G))|={m}")

        mixtures = ghr_image_equilibria(self.game, base.equilibria)
        profiles = [mix.profile for mix in mixtures]
        self.check("mixtures pass the Nash test", all(is_nash(self.image, p) for p in profiles))
        oracle = {p.distributions for p in image.equilibria}
        produced = {p.distributions for p in profiles}
        self.check(
            "balanced mixtures hit every image equilibrium exactly once",
            len(produced) == len(profiles) and produced == oracle,
            f"{len(produced)} distinct of {len(profiles)} mixtures, oracle has {len(oracle)}",
        )
        self._check_mixture_shape(base.equilibria)
        self._check_inverse(image.equilibria)

    def _check_mixture_shape(self, base_ne) -> None:
        uniform_ok = symmetric_ok = drop_ok = True
        for r, rho in enumerate(base_ne):
            for t, tau in enumerate(base_ne):
                inp = BalancedMixtureInput.from_base(self.game, rho, tau)
                outputs = balanced_mixture(inp)
                if NonUniform().holds(self.game, rho) or NonUniform().holds(self.game, tau):
                    uniform_ok &= all(NonUniform().holds(self.image, p) for p in outputs)
                symmetric_ok &= all(SymmetricProfile().holds(self.image, p) == (r == t) for p in outputs)
                ceiling = max(inp.u1_rho, inp.u2_rho, inp.u1_tau, inp.u2_tau)
                drop_ok &= all(u < ceiling for p in outputs for u in profile_utilities(self.image, p))
            for p in balanced_mixture(BalancedMixtureInput.from_base(self.game, None, rho)):
                uniform_ok &= Uniform().holds(self.image, p) == Uniform().holds(self.game, rho)
                symmetric_ok &= not SymmetricProfile().holds(self.image, p)
        self.check("non-uniform inputs give non-uniform mixtures", uniform_ok)
        self.check("a mixture is symmetric iff rho = tau", symmetric_ok)
        self.check("mixture utilities fall strictly below the input maximum", drop_ok)

    def _check_inverse(self, image_ne) -> None:
        cases = {case: 0 for case in DecompositionCase}
        failures = []
        for index, phi in enumerate(image_ne):
            try:
                decomposition = decompose_symmetric_ne(self.image, self.layout, phi)
                recovered = recover_base_ne(self.image, self.layout, phi)
            except InvariantViolation as exc:
                failures.append(f"#{index}: {exc}")
                continue
            cases[decomposition.case] += 1
            if not is_nash(self.game, recovered):
                failures.append(f"#{index}: recovered profile is not an equilibrium")
        detail = ", ".join(f"{case.value}={count}" for case, count in cases.items())
        self.check("every image equilibrium decomposes and round-trips", not failures, "; ".join(failures) or detail)
