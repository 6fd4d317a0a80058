"""Exact feasibility of ``A x = b, x >= 0`` over the rationals.

Phase-one simplex on a dense ``Fraction`` tableau with Bland's rule, so it
terminates without cycling. An infeasible system comes back with a Farkas
vector ``y`` (``y^T A >= 0`` and ``y^T b < 0``) read off the final tableau.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

logger = logging.getLogger(__name__)

Row = list[Fraction]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    x: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> None:
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.sign = [(-1 if bi < 0 else 1) for bi in b]
        self.rows: list[Row] = []
        self.rhs: list[Fraction] = []
        for i, (ai, bi) in enumerate(zip(A, b)):
            s = self.sign[i]
            art = [Fraction(0)] * self.m
            art[i] = Fraction(1)
            self.rows.append([Fraction(s * a) for a in ai] + art)
            self.rhs.append(Fraction(s * bi))
        # artificial i starts basic in row i
        self.basis = [self.n + i for i in range(self.m)]
        self.cost = [Fraction(0)] * self.n + [Fraction(1)] * self.m
        self.pivots = 0

    def reduced_cost(self, j: int) -> Fraction:
        return self.cost[j] - sum(
            (self.cost[self.basis[i]] * self.rows[i][j] for i in range(self.m)), Fraction(0)
        )

    def objective(self) -> Fraction:
        return sum((self.cost[self.basis[i]] * self.rhs[i] for i in range(self.m)), Fraction(0))

    def entering(self) -> int | None:
        for j in range(self.n + self.m):
            if self.reduced_cost(j) < 0:
                return j
        return None

    def leaving(self, j: int) -> int | None:
        best: int | None = None
        best_ratio: Fraction | None = None
        for i in range(self.m):
            a = self.rows[i][j]
            if a <= 0:
                continue
            ratio = self.rhs[i] / a
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[i] < self.basis[best])  # type: ignore[index]
            ):
                best, best_ratio = i, ratio
        return best

    def pivot(self, i: int, j: int) -> None:
        piv = self.rows[i][j]
        self.rows[i] = [a / piv for a in self.rows[i]]
        self.rhs[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.rows[k][j]
            if f == 0:
                continue
            self.rows[k] = [a - f * p for a, p in zip(self.rows[k], self.rows[i])]
            self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def dual(self) -> list[Fraction]:
        """``c_B^T B^-1``; ``B^-1`` sits in the artificial columns."""
        return [
            sum((self.cost[self.basis[i]] * self.rows[i][self.n + k] for i in range(self.m)), Fraction(0))
            for k in range(self.m)
        ]


def solve_feasibility(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> FeasibilityResult:
    if len(A) != len(b):
        raise ValueError("A and b disagree on the number of rows")
    tab = _Tableau(A, b)
    while True:
        j = tab.entering()
        if j is None:
            break
        i = tab.leaving(j)
        if i is None:  # phase one is bounded below by zero
            raise ArithmeticError("phase-one simplex reported unbounded")
        tab.pivot(i, j)
    logger.debug("phase one finished after %d pivots, objective %s", tab.pivots, tab.objective())

    if tab.objective() > 0:
        y = tab.dual()
        farkas = tuple(-s * yi for s, yi in zip(tab.sign, y))
        return FeasibilityResult(False, farkas=farkas, pivots=tab.pivots)

    x = [Fraction(0)] * tab.n
    for i, var in enumerate(tab.basis):
        if var < tab.n:
            x[var] = tab.rhs[i]
    return FeasibilityResult(True, x=tuple(x), pivots=tab.pivots)


def check_solution(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], x: Sequence[Fraction]) -> bool:
    if any(xi < 0 for xi in x):
        return False
    return all(sum((a * xi for a, xi in zip(row, x)), Fraction(0)) == bi for row, bi in zip(A, b))


def check_farkas(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    """``y^T A >= 0`` columnwise and ``y^T b < 0``: no nonnegative solution exists."""
    if len(y) != len(A):
        return False
    n = len(A[0]) if A else 0
    for j in range(n):
        if sum((yi * row[j] for yi, row in zip(y, A)), Fraction(0)) < 0:
            return False
    return sum((yi * bi for yi, bi in zip(y, b)), Fraction(0)) < 0
