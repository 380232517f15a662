"""GHR symmetrization, balanced mixtures and their inverse.

The image of an n1 x n2 bimatrix game <R, C> is the symmetric game
<S, S^T> with S = [[0, R], [C^T, 0]]. A strategy of the image is either a
base row (left half) or a base column (right half); for a profile phi of
the image, <-phi_i and ->phi_i denote the two halves of player i's vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Any, Sequence

from arith import Scalar
from errors import InvalidInputError, InvariantViolation
from games import Game, MixedProfile, check_structure, is_nash, normalize, profile_utilities

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GhrLayout:
    base_labels: tuple[tuple[str, ...], tuple[str, ...]]

    @property
    def n1(self) -> int:
        return len(self.base_labels[0])

    @property
    def n2(self) -> int:
        return len(self.base_labels[1])

    @property
    def size(self) -> int:
        return self.n1 + self.n2

    @property
    def left(self) -> range:
        return range(self.n1)

    @property
    def right(self) -> range:
        return range(self.n1, self.n1 + self.n2)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"p1:{label}" for label in self.base_labels[0]) + tuple(
            f"p2:{label}" for label in self.base_labels[1]
        )

    def literal_indices(self) -> tuple[int, ...]:
        """Indices of L (left) and its mirror L' (right), read off reduction labels."""
        return tuple(i for i, label in enumerate(self.labels) if label.split(":", 1)[1].startswith("lit:"))

    def split(self, vector: Sequence[Scalar]) -> tuple[tuple[Scalar, ...], tuple[Scalar, ...]]:
        return tuple(vector[: self.n1]), tuple(vector[self.n1 :])

    def to_json(self) -> dict[str, Any]:
        return {"kind": "ghr", "base_strategies": [list(labels) for labels in self.base_labels]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> GhrLayout:
        try:
            left, right = data["base_strategies"]
        except (KeyError, TypeError, ValueError):
            raise InvalidInputError("GHR layout JSON needs 'base_strategies' with two label lists") from None
        return cls((tuple(left), tuple(right)))


def ghr_symmetrize(g: Game) -> tuple[Game, GhrLayout]:
    g.require_bimatrix()
    g.require_win_lose()
    row, col = g.matrices
    layout = GhrLayout(g.strategy_labels)
    n1 = layout.n1

    def s(i: int, j: int) -> Fraction:
        if i < n1 <= j:
            return row[i][j - n1]
        if j < n1 <= i:
            return col[j][i - n1]
        return Fraction(0)

    labels = layout.labels
    image = Game.from_function((labels, labels), lambda p: (s(p[0], p[1]), s(p[1], p[0])))
    if check_structure(g).pup and not check_structure(image).pup:
        raise InvariantViolation("symmetrization lost the positive utility property")
    return image, layout


def base_game(sym_g: Game, layout: GhrLayout) -> Game:
    """Read <R, C> back off the off-diagonal blocks."""
    row, _ = sym_g.matrices
    n1, n2 = layout.n1, layout.n2
    r = [[row[i][n1 + j] for j in range(n2)] for i in range(n1)]
    c = [[row[n1 + j][i] for j in range(n2)] for i in range(n1)]
    return Game.from_bimatrix(r, c, layout.base_labels)


@dataclass(frozen=True)
class BalancedMixtureInput:
    """rho=None stands for the null pair <0, 0>."""

    rho: MixedProfile | None
    tau: MixedProfile
    u1_rho: Scalar
    u2_rho: Scalar
    u1_tau: Scalar
    u2_tau: Scalar

    @classmethod
    def from_base(cls, g: Game, rho: MixedProfile | None, tau: MixedProfile) -> BalancedMixtureInput:
        u1_tau, u2_tau = profile_utilities(g, tau)
        if rho is None:
            u1_rho = u2_rho = Fraction(0)
        else:
            u1_rho, u2_rho = profile_utilities(g, rho)
        return cls(rho, tau, u1_rho, u2_rho, u1_tau, u2_tau)


def _scaled(weight: Scalar, dist: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(weight * p for p in dist)


def balanced_mixture(inp: BalancedMixtureInput) -> tuple[MixedProfile, MixedProfile]:
    """(rho * tau, tau * rho) on the symmetrized game."""
    tau1, tau2 = inp.tau.distributions
    if inp.rho is None:
        zero1 = (Fraction(0),) * len(tau1)
        zero2 = (Fraction(0),) * len(tau2)
        first = MixedProfile((zero1 + tau2, tau1 + zero2))
        second = MixedProfile((tau1 + zero2, zero1 + tau2))
        return first, second
    rho1, rho2 = inp.rho.distributions
    den_a = inp.u1_tau + inp.u2_rho
    den_b = inp.u1_rho + inp.u2_tau
    if den_a == 0 or den_b == 0:
        raise InvariantViolation("balanced mixture weights have a zero denominator")
    a = inp.u1_tau / den_a
    b = inp.u1_rho / den_b
    phi1 = _scaled(a, rho1) + _scaled(1 - a, tau2)
    phi2 = _scaled(b, tau1) + _scaled(1 - b, rho2)
    return MixedProfile((phi1, phi2)), MixedProfile((phi2, phi1))


class DecompositionCase(str, Enum):
    C1 = "C'1"
    C2 = "C'2"
    C3 = "C'3"


@dataclass(frozen=True)
class Decomposition:
    case: DecompositionCase
    rho: MixedProfile | None
    tau: MixedProfile

    @property
    def recovered(self) -> tuple[MixedProfile, ...]:
        return (self.tau,) if self.rho is None else (self.rho, self.tau)


def _is_zero(half: Sequence[Scalar]) -> bool:
    return all(p == 0 for p in half)


def decompose_symmetric_ne(sym_g: Game, layout: GhrLayout, phi: MixedProfile) -> Decomposition:
    """Split an equilibrium of the image into the base equilibria it mixes."""
    check = is_nash(sym_g, phi)
    if not check:
        raise InvalidInputError(f"profile is not an equilibrium of the symmetrized game: {check.violation.describe()}")
    left1, right1 = layout.split(phi.distributions[0])
    left2, right2 = layout.split(phi.distributions[1])
    zeros = tuple(_is_zero(h) for h in (left1, right1, left2, right2))

    if not any(zeros):
        case = DecompositionCase.C1
        rho = MixedProfile((normalize(left1), normalize(right2)))
        tau = MixedProfile((normalize(left2), normalize(right1)))
    elif zeros == (True, False, False, True):
        case, rho = DecompositionCase.C2, None
        tau = MixedProfile((normalize(left2), normalize(right1)))
    elif zeros == (False, True, True, False):
        case, rho = DecompositionCase.C3, None
        tau = MixedProfile((normalize(left1), normalize(right2)))
    else:
        raise InvariantViolation(f"half-zero pattern {zeros} fits none of the three cases")

    base = base_game(sym_g, layout)
    for recovered in (rho, tau):
        if recovered is not None and not is_nash(base, recovered):
            raise InvariantViolation(f"{case.value}: recovered profile is not an equilibrium of the base game")
    first, second = balanced_mixture(BalancedMixtureInput.from_base(base, rho, tau))
    rebuilt = second if case is DecompositionCase.C3 else first
    if rebuilt != phi:
        raise InvariantViolation(f"{case.value}: balanced mixture of the recovered profiles does not rebuild phi")
    return Decomposition(case, rho, tau)


def recover_base_ne(sym_g: Game, layout: GhrLayout, phi: MixedProfile) -> MixedProfile:
    """One base equilibrium; in case C'1 the <-phi_2, ->phi_1 pair."""
    return decompose_symmetric_ne(sym_g, layout, phi).tau


@dataclass(frozen=True)
class MixtureImage:
    """One image equilibrium and where it came from (rho_index None = null pair)."""

    rho_index: int | None
    tau_index: int
    swapped: bool
    profile: MixedProfile


def ghr_image_equilibria(g: Game, base_ne: Sequence[MixedProfile]) -> list[MixtureImage]:
    """rho * tau over ordered pairs of base equilibria, plus both mixtures with the null pair."""
    images = []
    for t, tau in enumerate(base_ne):
        for r, rho in enumerate(base_ne):
            first, _ = balanced_mixture(BalancedMixtureInput.from_base(g, rho, tau))
            images.append(MixtureImage(r, t, False, first))
        first, second = balanced_mixture(BalancedMixtureInput.from_base(g, None, tau))
        images.append(MixtureImage(None, t, False, first))
        images.append(MixtureImage(None, t, True, second))
    return images


@dataclass(frozen=True)
class CountPrediction:
    base: int
    image: int
    sharp_phi: int
    parity: int


def predicted_ne_counts(gadget_ne: int, sharp_phi: int) -> CountPrediction:
    """|NE(G)| = |NE(gadget)| + #phi and |NE(image)| = N (N + 2)."""
    base = gadget_ne + sharp_phi
    return CountPrediction(base=base, image=base * (base + 2), sharp_phi=sharp_phi, parity=sharp_phi % 2)


def solve_sharp_phi(image_count: int, gadget_ne: int) -> int:
    """Invert N (N + 2) = image_count and subtract the gadget's equilibria."""
    base = isqrt(image_count + 1) - 1
    if base * (base + 2) != image_count:
        raise InvalidInputError(f"{image_count} is not of the form N(N+2)")
    if base < gadget_ne:
        raise InvalidInputError(f"image count {image_count} is below what {gadget_ne} gadget equilibria give")
    return base - gadget_ne
