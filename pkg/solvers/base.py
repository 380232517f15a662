import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable

from errors import InvalidInputError
from concurrency import run_batches
from games import Game, MixedProfile
from settings import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationResult:
    """Isolated equilibria in lexicographic order; empty when degenerate."""

    equilibria: tuple[MixedProfile, ...]
    degenerate: bool
    supports_scanned: int

    @property
    def count(self) -> int:
        return len(self.equilibria)


@dataclass(frozen=True)
class BatchResult:
    equilibria: tuple[MixedProfile, ...]
    degenerate: bool
    supports_scanned: int


class Enumerator(ABC):
    """Classe base para enumeradores exatos de equilíbrios."""

    name: str  # Deve ser definido nas subclasses

    def __init__(self, jobs: int | None = None, cap: int | None = None):
        settings = get_settings()
        self.jobs = max(1, jobs if jobs is not None else settings.jobs)
        self.cap = cap if cap is not None else settings.support_cap

    @abstractmethod
    def validate(self, g: Game) -> None:
        """Rejeita jogos fora do domínio do enumerador."""
        pass

    @abstractmethod
    def batches(self, g: Game) -> list[Any]:
        """Divide o trabalho em lotes independentes, em ordem determinística."""
        pass

    @abstractmethod
    def batch_worker(self) -> Callable[[Game, Any], BatchResult]:
        """Função de módulo (serializável) que processa um lote."""
        pass

    def check_cap(self, g: Game) -> None:
        if max(g.shape) > self.cap:
            raise InvalidInputError(f"{self.name}: {g.shape} exceeds the cap of {self.cap} strategies per player")

    def enumerate(self, g: Game) -> EnumerationResult:
        """Enumera os equilíbrios e devolve o resultado ordenado."""
        self.validate(g)
        self.check_cap(g)
        payloads = [(g, batch) for batch in self.batches(g)]
        results = run_batches(self.batch_worker(), payloads, self.jobs)
        scanned = sum(r.supports_scanned for r in results)
        if any(r.degenerate for r in results):
            logger.info("%s: degenerate game %s, count aborted after %d supports", self.name, g.shape, scanned)
            return EnumerationResult((), True, scanned)
        unique = {sigma.distributions: sigma for r in results for sigma in r.equilibria}
        ordered = tuple(sorted(unique.values(), key=MixedProfile.sort_key))
        logger.info("%s: %d equilibria over %d supports", self.name, len(ordered), scanned)
        return EnumerationResult(ordered, False, scanned)
