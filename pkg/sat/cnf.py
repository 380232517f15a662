from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from errors import InvalidInputError

logger = logging.getLogger(__name__)

Literal = int  # signed, 1-based variable index (DIMACS convention)
Clause = tuple[Literal, ...]


@dataclass(frozen=True)
class Assignment:
    """Truth values of variables 1..n, stored 0-based."""

    values: tuple[bool, ...]

    @classmethod
    def from_int(cls, bits: int, n: int) -> Assignment:
        return cls(tuple(bool(bits >> j & 1) for j in range(n)))

    @classmethod
    def from_literals(cls, literals: Iterable[Literal], n: int) -> Assignment:
        values: list[bool | None] = [None] * n
        for lit in literals:
            j = abs(lit) - 1
            if not 0 <= j < n or values[j] is not None:
                raise InvalidInputError(f"literal set does not pick exactly one polarity per variable: {lit}")
            values[j] = lit > 0
        if any(v is None for v in values):
            raise InvalidInputError("literal set leaves a variable unassigned")
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def true_literals(self) -> tuple[Literal, ...]:
        """The n-tuple of literals made true, in variable order."""
        return tuple(j + 1 if v else -(j + 1) for j, v in enumerate(self.values))

    def satisfies(self, lit: Literal) -> bool:
        value = self.values[abs(lit) - 1]
        return value if lit > 0 else not value

    def to_json(self) -> list[int]:
        return list(self.true_literals())


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.var_count < 0:
            raise InvalidInputError("variable count must be nonnegative")
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise InvalidInputError(f"literal {lit} out of range 1..{self.var_count}")

    @classmethod
    def of(cls, var_count: int, clauses: Iterable[Sequence[Literal]]) -> CnfFormula:
        return cls(var_count, tuple(tuple(c) for c in clauses))

    @property
    def n(self) -> int:
        return self.var_count

    def evaluate(self, assignment: Assignment) -> bool:
        if assignment.n != self.var_count:
            raise InvalidInputError(f"assignment over {assignment.n} variables, formula has {self.var_count}")
        return all(any(assignment.satisfies(lit) for lit in clause) for clause in self.clauses)

    def unsatisfied_clauses(self, assignment: Assignment) -> list[int]:
        return [c for c, clause in enumerate(self.clauses) if not any(assignment.satisfies(lit) for lit in clause)]

    def rename(self, permutation: Sequence[int]) -> CnfFormula:
        """Variable j+1 becomes permutation[j]+1."""
        return CnfFormula.of(
            self.var_count,
            [[(permutation[abs(lit) - 1] + 1) * (1 if lit > 0 else -1) for lit in clause] for clause in self.clauses],
        )


def check_cnf(formula: CnfFormula, require_3sat: bool = True, min_vars: int = 0) -> list[str]:
    """Validate a formula; returns warnings, raises on hard violations."""
    if formula.var_count < min_vars:
        raise InvalidInputError(f"formula has {formula.var_count} variables, at least {min_vars} required")
    warnings = []
    for c, clause in enumerate(formula.clauses):
        if require_3sat and len(clause) != 3:
            raise InvalidInputError(f"clause {c}: clause width ≠ 3 (got {len(clause)})")
        if len(set(clause)) != len(clause):
            warnings.append(f"clause {c} repeats a literal")
        if any(-lit in clause for lit in clause):
            warnings.append(f"clause {c} is a tautology")
    for warning in warnings:
        logger.warning(warning)
    return warnings
