from .cnf import Assignment, Clause, CnfFormula, Literal, check_cnf
from .counting import SatCount, count_sat
from .dimacs import parse_dimacs, write_dimacs
from .generators import random_3sat, unsatisfiable_3sat

__all__ = [
    "Assignment",
    "Clause",
    "CnfFormula",
    "Literal",
    "SatCount",
    "check_cnf",
    "count_sat",
    "parse_dimacs",
    "random_3sat",
    "unsatisfiable_3sat",
    "write_dimacs",
]
