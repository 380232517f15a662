from .base import CheckEntry, CheckStatus, Verifier
from .gadget_verifier import GadgetVerifier
from .ghr_count_verifier import GhrCountVerifier
from .reduction_verifier import ReductionVerifier
from .scenarios import DEFAULT_FORMULA, ScenarioId, ScenarioKind, ScenarioVerifier, run_scenario

__all__ = [
    "CheckEntry",
    "CheckStatus",
    "DEFAULT_FORMULA",
    "GadgetVerifier",
    "GhrCountVerifier",
    "ReductionVerifier",
    "ScenarioId",
    "ScenarioKind",
    "ScenarioVerifier",
    "Verifier",
    "run_scenario",
]
