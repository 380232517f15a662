from .base import EnumerationResult, Enumerator
from .restricted import enumerate_pure_ne, enumerate_uniform_ne
from .simplex import ExactLP
from .support_enumeration import (
    BimatrixSupportEnumerator,
    SymmetricSupportEnumerator,
    enumerate_ne_bimatrix,
    enumerate_symmetric_ne,
    find_identical_strategy_ne,
)

__all__ = [
    "BimatrixSupportEnumerator",
    "EnumerationResult",
    "Enumerator",
    "ExactLP",
    "SymmetricSupportEnumerator",
    "enumerate_ne_bimatrix",
    "enumerate_pure_ne",
    "enumerate_symmetric_ne",
    "enumerate_uniform_ne",
    "find_identical_strategy_ne",
]
