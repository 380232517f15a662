"""Exceções do projeto e códigos de saída da linha de comando."""

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_DEGENERATE = 3


class WinLoseLabError(Exception):
    """Base de todas as exceções do projeto."""

    exit_code: int = EXIT_CHECK_FAILED


class InvalidInputError(WinLoseLabError, ValueError):
    """Entrada rejeitada: forma incompatível, parâmetro fora do limite, pré-condição violada."""

    exit_code = EXIT_INVALID_INPUT


class DimacsParseError(InvalidInputError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DegenerateGameError(WinLoseLabError):
    """O oráculo encontrou um conjunto de equilíbrios de dimensão positiva."""

    exit_code = EXIT_DEGENERATE


class InvariantViolation(WinLoseLabError, AssertionError):
    """Uma asserção interna falhou (contradiz um resultado provado)."""


class CheckFailed(WinLoseLabError):
    """Uma verificação de propriedade falhou."""
