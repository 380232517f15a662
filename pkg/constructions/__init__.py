from .completion import CompletedGame, PureNE, pup_complete
from .diagonal import diagonal_embed
from .gadgets import GadgetId, GadgetKind, build_gadget, known_equilibria
from .reduction import (
    ReductionLayout,
    Role,
    RoleKind,
    build_reduction,
    cyclic_index_diff,
    embed_gadget_profile,
    induced_assignment,
    is_gadget_profile,
    is_literal_profile,
    literal_equilibrium,
    reduction_utility,
)
from .symmetrization import (
    BalancedMixtureInput,
    Decomposition,
    DecompositionCase,
    GhrLayout,
    MixtureImage,
    balanced_mixture,
    base_game,
    decompose_symmetric_ne,
    ghr_image_equilibria,
    ghr_symmetrize,
    predicted_ne_counts,
    recover_base_ne,
    solve_sharp_phi,
)

__all__ = [
    "BalancedMixtureInput",
    "CompletedGame",
    "Decomposition",
    "DecompositionCase",
    "GadgetId",
    "GadgetKind",
    "GhrLayout",
    "MixtureImage",
    "PureNE",
    "ReductionLayout",
    "Role",
    "RoleKind",
    "balanced_mixture",
    "base_game",
    "build_gadget",
    "build_reduction",
    "cyclic_index_diff",
    "decompose_symmetric_ne",
    "diagonal_embed",
    "embed_gadget_profile",
    "ghr_image_equilibria",
    "ghr_symmetrize",
    "induced_assignment",
    "is_gadget_profile",
    "is_literal_profile",
    "known_equilibria",
    "literal_equilibrium",
    "predicted_ne_counts",
    "pup_complete",
    "recover_base_ne",
    "solve_sharp_phi",
]
