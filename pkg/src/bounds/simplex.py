"""Exact rational simplex for LP feasibility."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)

SENSES = ("==", ">=", "<=")


class RationalSimplex:
    """Phase-one simplex over Fractions with Bland's rule.

    Variables are non-negative. Constraints are added one at a time;
    ``feasible()`` minimizes the sum of artificial variables.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.rows: List[List[Fraction]] = []
        self.senses: List[str] = []
        self.rhs: List[Fraction] = []
        self.solution: Optional[List[Fraction]] = None
        self.pivots = 0

    def add_constraint(self, coeffs: Sequence, sense: str, rhs) -> None:
        if len(coeffs) != self.num_vars:
            raise ValueError(f"Expected {self.num_vars} coefficients, got {len(coeffs)}")
        if sense not in SENSES:
            raise ValueError(f"Unknown constraint sense {sense!r}")
        self.rows.append([Fraction(c) for c in coeffs])
        self.senses.append(sense)
        self.rhs.append(Fraction(rhs))

    def _tableau(self):
        """Rows [original | slack/surplus | rhs] with non-negative rhs."""
        extra = [k for k, s in enumerate(self.senses) if s != "=="]
        width = self.num_vars + len(extra)
        tableau = []
        for k, (row, sense, b) in enumerate(zip(self.rows, self.senses, self.rhs)):
            line = list(row) + [Fraction(0)] * len(extra) + [b]
            if sense != "==":
                line[self.num_vars + extra.index(k)] = Fraction(-1 if sense == ">=" else 1)
            if b < 0:
                line = [-x for x in line]
            tableau.append(line)
        return tableau, width

    def feasible(self) -> bool:
        tableau, width = self._tableau()
        m = len(tableau)
        basis = [width + i for i in range(m)]  # artificial variables
        # Reduced costs of the phase-one objective; the last entry is its value.
        cost = [sum((tableau[i][j] for i in range(m)), Fraction(0)) for j in range(width + 1)]
        self.pivots = 0

        while True:
            entering = next((j for j in range(width) if cost[j] > 0), None)
            if entering is None:
                break
            leaving = None
            best = None
            for i in range(m):
                a = tableau[i][entering]
                if a > 0:
                    ratio = tableau[i][width] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                # Phase one is bounded below by zero.
                raise ArithmeticError("Unbounded phase-one problem")
            self._pivot(tableau, cost, leaving, entering, width)
            basis[leaving] = entering
            self.pivots += 1

        if cost[width] != 0:
            self.solution = None
            return False
        values = [Fraction(0)] * width
        for i, var in enumerate(basis):
            if var < width:
                values[var] = tableau[i][width]
        self.solution = values[: self.num_vars]
        return True

    @staticmethod
    def _pivot(tableau, cost, row: int, col: int, width: int):
        pivot_row = tableau[row]
        piv = pivot_row[col]
        if piv != 1:
            pivot_row[:] = [x / piv for x in pivot_row]
        for i, line in enumerate(tableau):
            if i != row and line[col] != 0:
                factor = line[col]
                tableau[i] = [x - factor * y for x, y in zip(line, pivot_row)]
        factor = cost[col]
        cost[:] = [x - factor * y for x, y in zip(cost, pivot_row)]
