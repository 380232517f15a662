import logging
import xml.etree.ElementTree as ET
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckEntry:
    name: str
    status: CheckStatus
    detail: str = ""


class Verifier(ABC):
    """Classe base para verificações que produzem relatório."""

    name: str  # Deve ser definido nas subclasses
    header: str = "exhaustive verification"

    def __init__(self):
        self.entries: list[CheckEntry] | None = None

    @abstractmethod
    def _run_checks(self) -> None:
        """Executa as verificações, registrando cada uma com `check`."""
        pass

    def run(self) -> list[CheckEntry]:
        """Executa as verificações e retorna as entradas."""
        self.entries = []
        self._run_checks()
        failed = sum(entry.status is CheckStatus.FAILED for entry in self.entries)
        logger.info("%s: %d checks, %d failed", self.name, len(self.entries), failed)
        return self.entries

    def check(self, name: str, condition: bool, detail: str = "") -> bool:
        status = CheckStatus.PASSED if condition else CheckStatus.FAILED
        self._record(CheckEntry(name, status, detail))
        return bool(condition)

    def skip(self, name: str, detail: str) -> None:
        self._record(CheckEntry(name, CheckStatus.SKIPPED, detail))

    def _record(self, entry: CheckEntry) -> None:
        if self.entries is None:
            raise RuntimeError("Verifier not started. Call run first.")
        self.entries.append(entry)

    @property
    def passed(self) -> bool:
        if self.entries is None:
            raise RuntimeError("Verifier not started. Call run first.")
        return all(entry.status is not CheckStatus.FAILED for entry in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [entry for entry in self.entries or [] if entry.status is CheckStatus.FAILED]

    def generate_report(self) -> str:
        """Gera relatório XML das verificações e retorna como string."""
        if self.entries is None:
            raise RuntimeError("Verifier not started. Call run first.")

        root = ET.Element("check_report")
        ET.SubElement(root, "verifier").text = self.name
        ET.SubElement(root, "header").text = self.header
        checks = ET.SubElement(root, "checks")
        for entry in self.entries:
            node = ET.SubElement(checks, "check", status=entry.status.value)
            ET.SubElement(node, "name").text = entry.name
            ET.SubElement(node, "detail").text = entry.detail
        ET.SubElement(root, "status").text = "passed" if self.passed else "failed"

        return ET.tostring(root, encoding="unicode", xml_declaration=False)

    def summary(self) -> str:
        lines = [f"{self.name} ({self.header})"]
        for entry in self.entries or []:
            suffix = f": {entry.detail}" if entry.detail else ""
            lines.append(f"  [{entry.status.value.upper():7}] {entry.name}{suffix}")
        return "\n".join(lines)
