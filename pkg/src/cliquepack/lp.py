"""Exact rational linear programming.

Solves max c.x subject to A.x <= b, x >= 0 with a dense tableau simplex
over exact rationals (gmpy2.mpq inside the tableau when available,
`fractions.Fraction` at the API boundary). A Bland's-rule fallback
guarantees termination; every optimal solve carries an exact primal/dual
certificate.

Scale target is desk-size instances (a few thousand variables); there is
deliberately no floating-point mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PivotBudgetExceeded

try:
    # exact rational type used inside the tableau; roughly an order of
    # magnitude faster than Fraction, with identical arithmetic
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover
    _rat = Fraction

DEFAULT_PIVOT_BUDGET = 200_000

ZERO = Fraction(0)
ONE = Fraction(1)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class LinearProgram:
    """max objective . x  s.t.  for each (row, rhs): row . x <= rhs,  x >= 0."""

    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length mismatch")
        for row, _ in self.constraints:
            if len(row) != self.num_vars:
                raise ValueError("constraint row length mismatch")


def make_lp(objective: Sequence, constraints: Sequence) -> LinearProgram:
    """Build a LinearProgram from int/str/Fraction coefficients."""
    obj = tuple(Fraction(x) for x in objective)
    cons = tuple(
        (tuple(Fraction(x) for x in row), Fraction(rhs)) for row, rhs in constraints
    )
    return LinearProgram(len(obj), obj, cons)


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None
    primal: tuple[Fraction, ...] | None
    dual: tuple[Fraction, ...] | None


def _pivot(rows, objrow, pr: int, pc: int, basis: list[int]) -> None:
    prow = rows[pr]
    piv = prow[pc]
    if piv != 1:
        inv = 1 / piv
        rows[pr] = prow = [x * inv for x in prow]
    for i, row in enumerate(rows):
        if i == pr:
            continue
        factor = row[pc]
        if factor:
            rows[i] = [a - factor * b if b else a for a, b in zip(row, prow)]
    factor = objrow[pc]
    if factor:
        objrow[:] = [a - factor * b if b else a for a, b in zip(objrow, prow)]
    basis[pr] = pc


# consecutive degenerate pivots before falling back to Bland's rule
_BLAND_TRIGGER = 30


def _run_simplex(rows, objrow, basis, allowed_cols, pivots_used, budget):
    """Dantzig pivoting with a Bland anti-cycling fallback.

    Cycling requires an unbroken run of degenerate pivots, so switching to
    Bland's rule whenever such a run exceeds _BLAND_TRIGGER preserves the
    termination guarantee while keeping typical pivot counts low. Both rules
    break ties by smallest index, so the path is deterministic.
    """
    ncols = len(objrow) - 1  # last entry is the objective value slot
    degen_streak = 0
    while True:
        pc = -1
        if degen_streak >= _BLAND_TRIGGER:
            for j in range(ncols):
                if objrow[j] > 0 and allowed_cols[j]:
                    pc = j
                    break
        else:
            best_rc = 0
            for j in range(ncols):
                rc = objrow[j]
                if rc > best_rc and allowed_cols[j]:
                    best_rc = rc
                    pc = j
        if pc < 0:
            return "optimal", pivots_used
        # ratio test, ties broken by smallest basis index (Bland)
        pr = -1
        best = None
        for i, row in enumerate(rows):
            a = row[pc]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pr]):
                    best = ratio
                    pr = i
        if pr < 0:
            return "unbounded", pivots_used
        if pivots_used >= budget:
            raise PivotBudgetExceeded(budget)
        _pivot(rows, objrow, pr, pc, basis)
        pivots_used += 1
        degen_streak = degen_streak + 1 if best == 0 else 0


def solve(lp: LinearProgram, pivot_budget: int = DEFAULT_PIVOT_BUDGET) -> LpSolution:
    """Solve exactly; phase 1 is entered only when some rhs is negative."""
    n = lp.num_vars
    m = len(lp.constraints)
    neg = [rhs < 0 for _, rhs in lp.constraints]
    n_art = sum(neg)

    # columns: 0..n-1 structural, n..n+m-1 slack, then artificials, then rhs
    zero, one = _rat(0), _rat(1)
    ncols = n + m + n_art
    rows: list[list] = []
    basis: list[int] = []
    art_cols: list[int] = []
    next_art = n + m
    for i, (coeffs, rhs) in enumerate(lp.constraints):
        row = [zero] * (ncols + 1)
        if neg[i]:
            for j, a in enumerate(coeffs):
                row[j] = -_rat(a)
            row[n + i] = -one
            row[next_art] = one
            row[-1] = -_rat(rhs)
            basis.append(next_art)
            art_cols.append(next_art)
            next_art += 1
        else:
            for j, a in enumerate(coeffs):
                row[j] = _rat(a)
            row[n + i] = one
            row[-1] = _rat(rhs)
            basis.append(n + i)
        rows.append(row)

    pivots = 0
    is_art = [False] * ncols
    for c in art_cols:
        is_art[c] = True
    allowed = [not a for a in is_art]

    if n_art:
        # phase 1: maximize -(sum of artificials); artificials are basic,
        # so the reduced-cost row is the sum of their rows
        objrow = [zero] * (ncols + 1)
        for i in range(m):
            if is_art[basis[i]]:
                row = rows[i]
                objrow = [a + b for a, b in zip(objrow, row)]
        for c in art_cols:
            objrow[c] = zero
        status, pivots = _run_simplex(rows, objrow, basis, allowed, pivots, pivot_budget)
        assert status == "optimal"  # phase-1 objective is bounded
        if objrow[-1] != 0:
            return LpSolution("infeasible", None, None, None)
        # drive any basic artificial out (its rhs is 0); if the whole row is
        # zero over real columns the constraint is redundant and stays inert
        for i in range(m):
            if is_art[basis[i]]:
                row = rows[i]
                for j in range(n + m):
                    if row[j]:
                        _pivot(rows, objrow, i, j, basis)
                        break

    # phase 2 objective row: reduced costs of the true objective
    objrow = [zero] * (ncols + 1)
    for j in range(n):
        objrow[j] = _rat(lp.objective[j])
    for i in range(m):
        b = basis[i]
        if b < n and lp.objective[b]:
            cb = _rat(lp.objective[b])
            row = rows[i]
            objrow = [a - cb * t for a, t in zip(objrow, row)]

    status, pivots = _run_simplex(rows, objrow, basis, allowed, pivots, pivot_budget)
    if status == "unbounded":
        return LpSolution("unbounded", None, None, None)

    primal = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            primal[b] = _to_fraction(rows[i][-1])
    # dual value of row i is minus the reduced cost of its slack column;
    # this holds for phase-1-negated rows too, since both the slack column
    # sign and the row multiplier sign flip
    dual = [_to_fraction(-objrow[n + i]) for i in range(m)]
    value = _to_fraction(-objrow[-1])
    return LpSolution("optimal", value, tuple(primal), tuple(dual))


def check_certificate(lp: LinearProgram, sol: LpSolution) -> bool:
    """Exact strong-duality check: primal feasible, dual feasible, equal values."""
    if sol.status != "optimal":
        return False
    x, y = sol.primal, sol.dual
    n, m = lp.num_vars, len(lp.constraints)
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        return False
    for (row, rhs) in lp.constraints:
        if sum(a * v for a, v in zip(row, x) if a) > rhs:
            return False
    for j in range(n):
        if sum(lp.constraints[i][0][j] * y[i] for i in range(m)) < lp.objective[j]:
            return False
    pv = sum(c * v for c, v in zip(lp.objective, x))
    dv = sum(lp.constraints[i][1] * y[i] for i in range(m))
    return pv == dv == sol.value
