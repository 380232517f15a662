import logging
from dataclasses import dataclass

from concurrency import run_batches
from errors import InvalidInputError
from settings import get_settings

from .cnf import Assignment, CnfFormula

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SatCount:
    count: int
    parity: int
    witnesses: tuple[Assignment, ...] | None = None


def _clause_masks(formula: CnfFormula) -> list[tuple[int, int]]:
    masks = []
    for clause in formula.clauses:
        pos = neg = 0
        for lit in clause:
            if lit > 0:
                pos |= 1 << (lit - 1)
            else:
                neg |= 1 << (-lit - 1)
        masks.append((pos, neg))
    return masks


def count_range(masks: list[tuple[int, int]], start: int, stop: int, collect: bool) -> tuple[int, list[int]]:
    """Count satisfying bit-vectors in [start, stop)."""
    count = 0
    models = []
    for bits in range(start, stop):
        if all(bits & pos or ~bits & neg for pos, neg in masks):
            count += 1
            if collect:
                models.append(bits)
    return count, models


def count_sat(
    formula: CnfFormula,
    witnesses: bool = False,
    jobs: int | None = None,
    max_vars: int | None = None,
) -> SatCount:
    """Exhaustive #phi and parity over the full truth table."""
    settings = get_settings()
    max_vars = settings.sat_vars_cap if max_vars is None else max_vars
    jobs = settings.jobs if jobs is None else jobs
    n = formula.var_count
    if n > max_vars:
        raise InvalidInputError(f"count_sat: {n} variables exceeds the cap of {max_vars}")
    masks = _clause_masks(formula)
    total = 1 << n
    parts_count = jobs if jobs > 1 and total >= 1 << 12 else 1
    step = -(-total // parts_count)
    payloads = [(masks, start, min(start + step, total), witnesses) for start in range(0, total, step)]
    parts = run_batches(count_range, payloads, jobs)
    count = sum(c for c, _ in parts)
    found = None
    if witnesses:
        found = tuple(Assignment.from_int(bits, n) for _, models in parts for bits in models)
    logger.info("#phi=%d over %d variables", count, n)
    return SatCount(count=count, parity=count % 2, witnesses=found)
