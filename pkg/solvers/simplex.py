"""Exact two-phase simplex over Fractions with Bland's rule.

Solves problems of the form

    A_eq y = b_eq,  A_ub y <= b_ub,  y >= 0

Only feasibility and per-coordinate optimization are needed by the
equilibrium oracle, so the interface stays small.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from errors import InvariantViolation

logger = logging.getLogger(__name__)

Row = list[Fraction]


class Tableau:
    def __init__(self, rows: list[Row], basis: list[int], width: int) -> None:
        # each row holds `width` coefficients followed by the rhs
        self.rows = rows
        self.basis = basis
        self.width = width

    def copy(self) -> Tableau:
        return Tableau([row[:] for row in self.rows], self.basis[:], self.width)

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        lead = pivot_row[c]
        if lead != 1:
            self.rows[r] = pivot_row = [x / lead for x in pivot_row]
        for q, row in enumerate(self.rows):
            if q != r and row[c] != 0:
                factor = row[c]
                self.rows[q] = [x - factor * y for x, y in zip(row, pivot_row)]
        self.basis[r] = c

    def minimize(self, cost: Sequence[Fraction], allowed: int | None = None) -> Fraction | None:
        """Run Bland pivots for min cost.y over the first `allowed` columns; None if unbounded."""
        allowed = self.width if allowed is None else allowed
        while True:
            basic_cost = [cost[b] for b in self.basis]
            entering = None
            for j in range(allowed):
                reduced = cost[j] - sum(cb * row[j] for cb, row in zip(basic_cost, self.rows) if cb)
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return sum(cb * row[-1] for cb, row in zip(basic_cost, self.rows))
            leaving = None
            best = None
            for r, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[r] < self.basis[leaving]):
                        best, leaving = ratio, r
            if leaving is None:
                return None
            self.pivot(leaving, entering)

    def point(self, size: int) -> tuple[Fraction, ...]:
        values = [Fraction(0)] * size
        for r, b in enumerate(self.basis):
            if b < size:
                values[b] = self.rows[r][-1]
        return tuple(values)


class ExactLP:
    """Feasible region of {A_eq y = b_eq, A_ub y <= b_ub, y >= 0}."""

    def __init__(
        self,
        a_eq: Sequence[Sequence[Fraction]],
        b_eq: Sequence[Fraction],
        a_ub: Sequence[Sequence[Fraction]] = (),
        b_ub: Sequence[Fraction] = (),
    ) -> None:
        self.n = len(a_eq[0]) if a_eq else (len(a_ub[0]) if a_ub else 0)
        self._tableau = self._phase_one(a_eq, b_eq, a_ub, b_ub)

    @property
    def feasible(self) -> bool:
        return self._tableau is not None

    def _phase_one(self, a_eq, b_eq, a_ub, b_ub) -> Tableau | None:
        n = self.n
        m_ub = len(a_ub)
        raw: list[tuple[Row, Fraction, int | None]] = []
        for coeffs, rhs in zip(a_eq, b_eq):
            raw.append(([Fraction(c) for c in coeffs] + [Fraction(0)] * m_ub, Fraction(rhs), None))
        for k, (coeffs, rhs) in enumerate(zip(a_ub, b_ub)):
            slack = [Fraction(0)] * m_ub
            slack[k] = Fraction(1)
            raw.append(([Fraction(c) for c in coeffs] + slack, Fraction(rhs), n + k))
        base = n + m_ub
        rows: list[Row] = []
        basis: list[int] = []
        artificial = 0
        needs_artificial = []
        for coeffs, rhs, slack_col in raw:
            if rhs < 0:
                coeffs, rhs = [-c for c in coeffs], -rhs
                slack_col = None
            needs_artificial.append(slack_col is None)
            rows.append((coeffs, rhs, slack_col))
            artificial += slack_col is None
        width = base + artificial
        table: list[Row] = []
        a = 0
        for (coeffs, rhs, slack_col), needs in zip(rows, needs_artificial):
            extra = [Fraction(0)] * artificial
            if needs:
                extra[a] = Fraction(1)
                basis.append(base + a)
                a += 1
            else:
                basis.append(slack_col)
            table.append(coeffs + extra + [rhs])
        tableau = Tableau(table, basis, width)
        if artificial:
            cost = [Fraction(0)] * base + [Fraction(1)] * artificial
            optimum = tableau.minimize(cost)
            if optimum is None or optimum > 0:
                return None
            self._drive_out_artificials(tableau, base)
        # drop artificial columns
        tableau.rows = [row[:base] + [row[-1]] for row in tableau.rows]
        tableau.width = base
        return tableau

    @staticmethod
    def _drive_out_artificials(tableau: Tableau, base: int) -> None:
        r = 0
        while r < len(tableau.rows):
            if tableau.basis[r] >= base:
                row = tableau.rows[r]
                c = next((j for j in range(base) if row[j] != 0), None)
                if c is None:
                    # redundant equality
                    del tableau.rows[r]
                    del tableau.basis[r]
                    continue
                tableau.pivot(r, c)
            r += 1

    def vertex(self) -> tuple[Fraction, ...]:
        if self._tableau is None:
            raise InvariantViolation("infeasible program has no vertex")
        return self._tableau.point(self.n)

    def minimize(self, objective: Sequence[Fraction]) -> Fraction | None:
        if self._tableau is None:
            raise InvariantViolation("cannot optimize an infeasible program")
        tableau = self._tableau.copy()
        cost = [Fraction(c) for c in objective] + [Fraction(0)] * (tableau.width - self.n)
        return tableau.minimize(cost)

    def maximize(self, objective: Sequence[Fraction]) -> Fraction | None:
        value = self.minimize([-Fraction(c) for c in objective])
        return None if value is None else -value

    def is_single_point(self) -> bool:
        """True iff every coordinate is pinned to the value at the first vertex."""
        anchor = self.vertex()
        for t in range(self.n):
            unit = [Fraction(int(j == t)) for j in range(self.n)]
            low, high = self.minimize(unit), self.maximize(unit)
            if low is None or high is None or low != anchor[t] or high != anchor[t]:
                logger.debug("coordinate %d ranges over [%s, %s]", t, low, high)
                return False
        return True
