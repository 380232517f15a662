"""The five fixed win-lose gadget games."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from arith import QuadExt
from errors import InvalidInputError
from games import Game, MixedProfile, uniform_on


class GadgetKind(str, Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"


@dataclass(frozen=True)
class GadgetId:
    kind: GadgetKind
    param: int | None = None

    def __post_init__(self) -> None:
        if self.kind in (GadgetKind.G1, GadgetKind.G5):
            if self.param is None or self.param < 1:
                raise InvalidInputError(f"{self.kind.value} needs a parameter >= 1")
        elif self.param is not None:
            raise InvalidInputError(f"{self.kind.value} takes no parameter")

    @classmethod
    def parse(cls, text: str, h: int | None = None, k: int | None = None) -> GadgetId:
        """Accepts "G1:3", "g5(2)", or a bare name with --h/--k supplied separately."""
        match = re.fullmatch(r"\s*[gG]([1-5])\s*(?:[:(\[]\s*(\d+)\s*[)\]]?)?\s*", text)
        if not match:
            raise InvalidInputError(f"unknown gadget {text!r}")
        kind = GadgetKind(f"G{match.group(1)}")
        param = int(match.group(2)) if match.group(2) else None
        if param is None:
            param = h if kind is GadgetKind.G1 else k if kind is GadgetKind.G5 else None
        return cls(kind, param)

    def __str__(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}({self.param})"


# (s1, s2, s3) -> utility vector
_G2_TABLE = {
    (0, 0, 0): (1, 0, 1),
    (0, 0, 1): (1, 1, 0),
    (0, 0, 2): (0, 1, 0),
    (0, 1, 0): (0, 1, 0),
    (0, 1, 1): (1, 0, 0),
    (0, 1, 2): (0, 0, 1),
    (1, 0, 0): (0, 0, 1),
    (1, 0, 1): (0, 1, 1),
    (1, 0, 2): (1, 0, 0),
    (1, 1, 0): (1, 1, 0),
    (1, 1, 1): (0, 0, 1),
    (1, 1, 2): (1, 1, 0),
}

_G3_ROW = (
    (0, 0, 1, 1),
    (0, 1, 1, 0),
    (0, 1, 0, 1),
    (1, 0, 0, 0),
)

_G4_ROW = (
    (1, 0, 1),
    (0, 0, 1),
    (0, 1, 0),
)
_G4_COL = (
    (0, 1, 0),
    (1, 0, 0),
    (1, 0, 1),
)


def _labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def diagonal_matrix(k: int) -> tuple[tuple[int, ...], ...]:
    """D_k[i][j] = 1 iff i <= j."""
    return tuple(tuple(int(i <= j) for j in range(k)) for i in range(k))


def build_gadget(gadget: GadgetId) -> Game:
    if gadget.kind is GadgetKind.G1:
        h = gadget.param
        return Game.from_function(
            (_labels(h), _labels(h)),
            lambda s: (int(s[0] == s[1]), int(s[1] == (s[0] + 1) % h)),
        )
    if gadget.kind is GadgetKind.G2:
        return Game.from_function((_labels(2), _labels(2), _labels(3)), lambda s: _G2_TABLE[s])
    if gadget.kind is GadgetKind.G3:
        col = tuple(tuple(1 - x for x in row) for row in _G3_ROW)
        return Game.from_bimatrix(_G3_ROW, col)
    if gadget.kind is GadgetKind.G4:
        return Game.from_bimatrix(_G4_ROW, _G4_COL)
    d = diagonal_matrix(gadget.param)
    return Game.from_bimatrix(d, tuple(zip(*d)))


def g2_equilibrium() -> MixedProfile:
    """The unique (irrational) equilibrium of the three-player gadget."""
    golden = QuadExt(Fraction(-1, 2), Fraction(1, 2))  # (sqrt5 - 1)/2
    return MixedProfile(
        (
            (golden, 1 - golden),
            (1 - golden, golden),
            (QuadExt(Fraction(1, 8), Fraction(1, 8)), QuadExt(Fraction(5, 8), Fraction(-1, 8)), Fraction(1, 4)),
        )
    )


def g4_segment(t: Fraction) -> MixedProfile:
    """Point t in [0, 1/2] of the segment that makes up every equilibrium of G4."""
    half = Fraction(1, 2)
    if not 0 <= t <= half:
        raise InvalidInputError(f"segment parameter {t} outside [0, 1/2]")
    return MixedProfile(((half, Fraction(0), half), (half - t, half, t)))


def known_equilibria(gadget: GadgetId) -> tuple[MixedProfile, ...] | None:
    """Closed-form equilibria; for G4 the two endpoints of its equilibrium segment. None for G3."""
    if gadget.kind is GadgetKind.G1:
        h = gadget.param
        full = uniform_on(h, range(h))
        return (MixedProfile((full, full)),)
    if gadget.kind is GadgetKind.G2:
        return (g2_equilibrium(),)
    if gadget.kind is GadgetKind.G4:
        return (g4_segment(Fraction(0)), g4_segment(Fraction(1, 2)))
    if gadget.kind is GadgetKind.G5:
        k = gadget.param
        return tuple(MixedProfile.pure((k, k), (s, s)) for s in range(k))
    return None
