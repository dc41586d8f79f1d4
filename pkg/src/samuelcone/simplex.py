"""Two-phase tableau simplex over exact rationals with Bland's pivot rule.

Every program is a minimisation. Constraints are ``coeffs · x (<=|=|>=) rhs``
and each variable is either nonnegative or free (free variables are split
into a difference of two nonnegative ones internally).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionError
from .rational import dot, ratvec

log = logging.getLogger(__name__)

LE, EQ, GE = "<=", "=", ">="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in (LE, EQ, GE):
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", ratvec(self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def satisfied_by(self, point: Sequence) -> bool:
        lhs = dot(self.coeffs, point)
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    objective: tuple
    constraints: tuple = ()
    nonneg: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "objective", ratvec(self.objective))
        cons = tuple(c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints)
        object.__setattr__(self, "constraints", cons)
        n = len(self.objective)
        for c in cons:
            if len(c.coeffs) != n:
                raise DimensionError(f"constraint of length {len(c.coeffs)} in a program with {n} variables")
        if self.nonneg is None:
            object.__setattr__(self, "nonneg", (True,) * n)
        elif len(self.nonneg) != n:
            raise DimensionError("nonneg flags do not match the variable count")

    @property
    def nvars(self) -> int:
        return len(self.objective)

    def is_feasible_point(self, point: Sequence) -> bool:
        if len(point) != self.nvars:
            return False
        if any(flag and x < 0 for flag, x in zip(self.nonneg, point)):
            return False
        return all(c.satisfied_by(point) for c in self.constraints)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[tuple] = None
    pivots: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    """Dense tableau: ``rows[i]`` holds constraint coefficients, ``rhs[i]`` its value."""

    def __init__(self, rows, rhs, basis, cost):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0
        self.set_cost(cost)

    def set_cost(self, cost):
        # reduced costs d_j = c_j - c_B B^-1 A_j and objective value z = c_B B^-1 b
        d = list(cost)
        z = Fraction(0)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                d = [dj - cb * aij for dj, aij in zip(d, row)]
                z += cb * self.rhs[i]
        self.d = d
        self.z = z

    def pivot(self, r, c):
        prow = self.rows[r]
        inv = 1 / prow[c]
        prow = [x * inv for x in prow]
        self.rows[r] = prow
        self.rhs[r] *= inv
        for i, row in enumerate(self.rows):
            if i != r and row[c]:
                f = row[c]
                self.rows[i] = [x - f * y for x, y in zip(row, prow)]
                self.rhs[i] -= f * self.rhs[r]
        if self.d[c]:
            f = self.d[c]
            self.d = [x - f * y for x, y in zip(self.d, prow)]
            self.z += f * self.rhs[r]
        self.basis[r] = c
        self.pivots += 1

    def run(self, allowed: int, dump=None) -> str:
        """Iterate to optimality over columns ``< allowed``; Bland's rule on both choices."""
        while True:
            if dump is not None:
                dump(self)
            enter = next((j for j in range(allowed) if self.d[j] < 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def _dump_tableau(tab: _Tableau) -> None:
    log.debug("basis=%s z=%s d=%s", tab.basis, tab.z, [str(x) for x in tab.d])
    for row, b in zip(tab.rows, tab.rhs):
        log.debug("  %s | %s", [str(x) for x in row], b)


def lp_solve(lp: LinearProgram, *, trace: bool = False) -> LPResult:
    """Minimise ``lp.objective · x`` exactly; the returned point is a basic feasible solution."""
    n = lp.nvars
    if n == 0:
        if all(c.satisfied_by(()) for c in lp.constraints):
            return LPResult(OPTIMAL, Fraction(0), ())
        return LPResult(INFEASIBLE)

    # column layout: one column per nonneg variable, two per free variable
    colmap = []
    for j, flag in enumerate(lp.nonneg):
        colmap.append((j, 1))
        if not flag:
            colmap.append((j, -1))
    nstruct = len(colmap)

    rows, rhs, kinds = [], [], []
    for con in lp.constraints:
        coeffs = [con.coeffs[j] * s for j, s in colmap]
        b, rel = con.rhs, con.relation
        if b < 0:
            coeffs = [-x for x in coeffs]
            b = -b
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        rows.append(coeffs)
        rhs.append(b)
        kinds.append(rel)

    m = len(rows)
    nslack = sum(1 for k in kinds if k != EQ)
    nart = sum(1 for k in kinds if k != LE)
    width = nstruct + nslack + nart
    full_rows = []
    basis = []
    s_col = nstruct
    a_col = nstruct + nslack
    for coeffs, kind in zip(rows, kinds):
        row = coeffs + [Fraction(0)] * (nslack + nart)
        if kind == LE:
            row[s_col] = Fraction(1)
            basis.append(s_col)
            s_col += 1
        elif kind == GE:
            row[s_col] = Fraction(-1)
            s_col += 1
            row[a_col] = Fraction(1)
            basis.append(a_col)
            a_col += 1
        else:
            row[a_col] = Fraction(1)
            basis.append(a_col)
            a_col += 1
        full_rows.append(row)

    dump = _dump_tableau if trace or log.isEnabledFor(logging.DEBUG) else None
    real_width = nstruct + nslack
    phase1_cost = [Fraction(0)] * real_width + [Fraction(1)] * nart
    tab = _Tableau(full_rows, list(rhs), basis, phase1_cost)
    if nart:
        tab.run(width, dump)
        if tab.z != 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # pivot remaining (zero-valued) artificials out, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= real_width:
                col = next((j for j in range(real_width) if tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1
    tab.rows = [row[:real_width] for row in tab.rows]

    cost = [lp.objective[j] * s for j, s in colmap] + [Fraction(0)] * nslack
    tab.set_cost(cost)
    status = tab.run(real_width, dump)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    cols = [Fraction(0)] * real_width
    for i, b in enumerate(tab.basis):
        cols[b] = tab.rhs[i]
    point = [Fraction(0)] * n
    for c, (j, s) in enumerate(colmap):
        point[j] += s * cols[c]
    point = tuple(point)
    value = dot(lp.objective, point)
    return LPResult(OPTIMAL, value, point, pivots=tab.pivots)


def lp_feasible(constraints: Sequence, nvars: int | None = None, nonneg: Sequence | None = None):
    """Phase-one feasibility test. Returns ``(True, point)`` or ``(False, None)``.

    Variables are nonnegative unless ``nonneg`` says otherwise.
    """
    cons = tuple(c if isinstance(c, Constraint) else Constraint(*c) for c in constraints)
    if nvars is None:
        if not cons:
            raise DimensionError("cannot infer the variable count of an empty system")
        nvars = len(cons[0].coeffs)
    lp = LinearProgram((0,) * nvars, cons, None if nonneg is None else tuple(nonneg))
    res = lp_solve(lp)
    if res.status == INFEASIBLE:
        return False, None
    return True, res.point
