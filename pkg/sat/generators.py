import random

from errors import InvalidInputError

from .cnf import CnfFormula


def random_3sat(n: int, m: int, rng: random.Random) -> CnfFormula:
    """m clauses, each over three distinct variables with random signs."""
    if n < 3:
        raise InvalidInputError("random 3SAT needs at least 3 variables")
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(n, tuple(clauses))


def unsatisfiable_3sat(n: int) -> CnfFormula:
    """All eight sign patterns over variables 1, 2, 3 (the rest are free)."""
    if n < 3:
        raise InvalidInputError("needs at least 3 variables")
    clauses = [
        tuple(v if (pattern >> (v - 1)) & 1 else -v for v in (1, 2, 3))
        for pattern in range(8)
    ]
    return CnfFormula(n, tuple(clauses))
