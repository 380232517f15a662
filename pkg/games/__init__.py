from .game import Game, Matrix, PureProfile, transpose
from .nash import (
    NashCheck,
    StructureReport,
    Violation,
    check_structure,
    conditional_utilities,
    conditional_utility,
    expected_utility,
    has_pup,
    is_nash,
    profile_utilities,
    pure_ne_from_zero_utility,
)
from .profile import FieldTag, MixedProfile, normalize, uniform_on

__all__ = [
    "FieldTag",
    "Game",
    "Matrix",
    "MixedProfile",
    "NashCheck",
    "PureProfile",
    "StructureReport",
    "Violation",
    "check_structure",
    "conditional_utilities",
    "conditional_utility",
    "expected_utility",
    "has_pup",
    "is_nash",
    "normalize",
    "profile_utilities",
    "pure_ne_from_zero_utility",
    "transpose",
    "uniform_on",
]
