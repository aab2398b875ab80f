"""Dense exact simplex for linear fractional objectives.

A :class:`Tableau` holds the constraint rows ``x_B + A_hat x_N = b_hat`` and,
for every tracked objective, a numerator row and a denominator row kept in
"z-row" form: entry 0 is the current value (``alpha_bar`` / ``beta_bar``) and
entry ``1 + j`` is the *negated* updated coefficient (``-p_bar_j`` /
``-q_bar_j``). With that convention one Gauss-Jordan pivot updates all rows.

Anti-cycling: entering and leaving ties break by lowest index; after a
degenerate pivot the next choice switches to Bland's smallest-index rule
until a nondegenerate pivot occurs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence

from . import _debug, kernels
from .errors import DimensionMismatch, NotNonbasic
from .model import ONE, ZERO, FractionalObjective, fmt, rational

log = logging.getLogger(__name__)


class Status(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class Tableau:
    __slots__ = ("rows", "objrows", "basis", "ncols", "nstruct", "pivots")

    def __init__(self, rows, objrows, basis, ncols, nstruct, pivots=0):
        self.rows = rows
        self.objrows = objrows
        self.basis = basis
        self.ncols = ncols
        self.nstruct = nstruct
        self.pivots = pivots

    @classmethod
    def build(cls, std_rows, nstruct: int, objectives: Sequence[FractionalObjective]) -> "Tableau":
        """Slack-basis tableau for ``A x <= b, x >= 0`` (may start primal infeasible)."""
        m = len(std_rows)
        ncols = nstruct + m
        rows = []
        for i, (coeffs, rhs) in enumerate(std_rows):
            if len(coeffs) != nstruct:
                raise DimensionMismatch(f"row {i} has {len(coeffs)} coefficients, expected {nstruct}")
            row = [rational(rhs)] + [rational(c) for c in coeffs] + [ZERO] * m
            row[1 + nstruct + i] = ONE
            rows.append(row)
        objrows = []
        pad = [ZERO] * m
        for obj in objectives:
            if obj.n != nstruct:
                raise DimensionMismatch("objective length does not match the variable count")
            objrows.append([obj.num_const] + [-c for c in obj.num] + pad)
            objrows.append([obj.den_const] + [-c for c in obj.den] + pad)
        return cls(rows, objrows, list(range(nstruct, ncols)), ncols, nstruct)

    def copy(self) -> "Tableau":
        return Tableau(
            [list(r) for r in self.rows],
            [list(r) for r in self.objrows],
            list(self.basis),
            self.ncols,
            self.nstruct,
            self.pivots,
        )

    @property
    def nobj(self) -> int:
        return len(self.objrows) // 2

    @property
    def m(self) -> int:
        return len(self.rows)

    def nonbasic(self) -> list:
        basic = set(self.basis)
        return [j for j in range(self.ncols) if j not in basic]

    def values(self) -> list:
        """Current basic solution over all columns."""
        x = [ZERO] * self.ncols
        for row, j in zip(self.rows, self.basis):
            x[j] = row[0]
        return x

    def point(self) -> tuple:
        return tuple(self.values()[: self.nstruct])

    def num_value(self, o: int):
        return self.objrows[2 * o][0]

    def den_value(self, o: int):
        return self.objrows[2 * o + 1][0]

    def value(self, o: int):
        return self.num_value(o) / self.den_value(o)

    def is_primal_feasible(self) -> bool:
        return all(row[0] >= 0 for row in self.rows)

    def reduced_gradients(self, o: int, cols: Optional[Sequence[int]] = None) -> list:
        """``beta_bar * p_bar_j - alpha_bar * q_bar_j`` for each column in ``cols``."""
        if cols is None:
            cols = self.nonbasic()
        return kernels.gammas(self.objrows[2 * o], self.objrows[2 * o + 1], [j + 1 for j in cols])

    def pivot(self, r: int, e: int, extra=()):
        kernels.pivot(self.rows + self.objrows + list(extra), r, e + 1)
        self.basis[r] = e
        self.pivots += 1

    def basis_key(self):
        return frozenset(self.basis)


def reduced_gradient(t: Tableau, objective: int, j: int):
    if j < 0 or j >= t.ncols or j in t.basis:
        raise NotNonbasic(f"column {j} is not nonbasic")
    return t.reduced_gradients(objective, [j])[0]


@dataclass
class LfpSolution:
    status: Status
    point: Optional[tuple]
    value: Optional[object]
    tableau: Tableau

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def _finish(t: Tableau, status: Status, objective: int) -> LfpSolution:
    if status is Status.OPTIMAL:
        return LfpSolution(status, t.point(), t.value(objective), t)
    return LfpSolution(status, None, None, t)


def _check_denominators(t: Tableau):
    for o in range(t.nobj):
        _debug.check(t.den_value(o) > 0, f"denominator of objective {o} is {t.den_value(o)} at a feasible basis")


def _trace_pivot(phase, t, e, leaving, objective):
    log.debug("%s pivot: enter x%d leave x%d value %s", phase, e + 1, leaving + 1, fmt(t.value(objective)))


def solve_primal_fractional(t: Tableau, objective: int) -> LfpSolution:
    """Convex-simplex iterations for ``objective`` from a primal feasible basis."""
    debug = _debug.ENABLED
    tracing = log.isEnabledFor(logging.DEBUG)
    seen = {t.basis_key()} if debug else None
    bland = False
    rows = t.rows
    while True:
        if debug:
            _check_denominators(t)
        nb = t.nonbasic()
        gam = t.reduced_gradients(objective, nb)
        e = None
        best = ZERO
        for j, g in zip(nb, gam):
            if g > best:
                e, best = j, g
                if bland:
                    break
        if e is None:
            return _finish(t, Status.OPTIMAL, objective)
        col = e + 1
        r = None
        for i, row in enumerate(rows):
            a = row[col]
            if a > 0:
                ratio = row[0] / a
                if r is None or ratio < rmin or (ratio == rmin and t.basis[i] < t.basis[r]):
                    r, rmin = i, ratio
        if r is None:
            return _finish(t, Status.UNBOUNDED, objective)
        before = t.value(objective) if debug else None
        leaving = t.basis[r]
        t.pivot(r, e)
        bland = rmin == 0
        if tracing:
            _trace_pivot("primal", t, e, leaving, objective)
        if debug:
            _debug.check(t.value(objective) >= before, "objective decreased on a primal pivot")
            key = t.basis_key()
            _debug.check(key not in seen, "basis repeated during primal simplex")
            seen.add(key)


def _dual_phase(t: Tableau, price: list) -> bool:
    """Dual simplex on the frozen linear price row until ``b_hat >= 0``.

    ``price`` is a z-row (entry ``1 + j`` holds ``-pi_j`` with ``pi_j <= 0``)
    that is pivoted along with the tableau. Returns False on infeasibility.
    """
    debug = _debug.ENABLED
    tracing = log.isEnabledFor(logging.DEBUG)
    seen = {t.basis_key()} if debug else None
    bland = False
    rows = t.rows
    basis = t.basis
    while True:
        r = None
        for i, row in enumerate(rows):
            v = row[0]
            if v < 0:
                if r is None:
                    r = i
                elif bland:
                    if basis[i] < basis[r]:
                        r = i
                elif v < rows[r][0] or (v == rows[r][0] and basis[i] < basis[r]):
                    r = i
        if r is None:
            return True
        prow = rows[r]
        e = None
        basic = set(basis)
        for j in range(t.ncols):
            a = prow[j + 1]
            if a < 0 and j not in basic:
                ratio = price[j + 1] / -a
                if e is None or ratio < emin:
                    e, emin = j, ratio
        if e is None:
            return False
        leaving = basis[r]
        t.pivot(r, e, extra=(price,))
        bland = emin == 0
        if tracing:
            log.debug("dual pivot: enter x%d leave x%d", e + 1, leaving + 1)
        if debug:
            key = t.basis_key()
            _debug.check(key not in seen, "basis repeated during dual simplex")
            seen.add(key)


def reoptimize_dual(t: Tableau, objective: int) -> LfpSolution:
    """Restore primal feasibility by dual simplex, then clean up with primal fractional pivots.

    The dual ratio test prices columns with the objective's reduced
    gradients frozen at entry (positive ones clamped to zero), which is a
    genuine linear objective, so the dual phase terminates; the primal
    phase then restores optimality for the ratio objective.
    """
    if not t.is_primal_feasible():
        nb = t.nonbasic()
        gam = t.reduced_gradients(objective, nb) if t.nobj else [ZERO] * len(nb)
        price = [ZERO] * (t.ncols + 1)
        for j, g in zip(nb, gam):
            if g < 0:
                price[j + 1] = -g
        if not _dual_phase(t, price):
            return _finish(t, Status.INFEASIBLE, objective)
    return solve_primal_fractional(t, objective)


def _normalise_coeffs(coeffs, ncols):
    if isinstance(coeffs, Mapping):
        items = [(int(j), rational(c)) for j, c in coeffs.items()]
    else:
        items = [(j, rational(c)) for j, c in enumerate(coeffs)]
    for j, _ in items:
        if j < 0 or j >= ncols:
            raise DimensionMismatch(f"row references column {j}; tableau has {ncols}")
    return items


def add_row(t: Tableau, coeffs, rel: str, rhs) -> Tableau:
    """Append ``coeffs . x (rel) rhs`` with a fresh basic slack, priced against the basis.

    ``coeffs`` is a sequence over existing columns or a ``{column: coeff}``
    mapping. ``ge`` rows are stored negated so the new slack is the surplus.
    The tableau stays dual-consistent but may become primal infeasible.
    """
    if rel == "eq":
        add_row(t, coeffs, "le", rhs)
        return add_row(t, coeffs, "ge", rhs)
    if rel not in ("le", "ge"):
        raise ValueError(f"unknown relation {rel!r}")
    items = _normalise_coeffs(coeffs, t.ncols)
    sign = 1 if rel == "le" else -1
    for row in t.rows:
        row.append(ZERO)
    for row in t.objrows:
        row.append(ZERO)
    new = [ZERO] * (t.ncols + 2)
    new[0] = sign * rational(rhs)
    new[-1] = ONE
    for j, c in items:
        if c:
            new[j + 1] += sign * c
    for row, j in zip(t.rows, t.basis):
        f = new[j + 1]
        if f:
            kernels.sub_scaled(new, row, f)
    t.rows.append(new)
    t.basis.append(t.ncols)
    t.ncols += 1
    return t


def solve_lfp(std_rows, nstruct: int, objectives: Sequence[FractionalObjective], objective: int = 0) -> LfpSolution:
    """Maximise one objective over ``{x >= 0 : A x <= b}`` from scratch.

    A negative right-hand side starts with a dual phase on a zero price row,
    which plays the role of phase one.
    """
    t = Tableau.build(std_rows, nstruct, objectives)
    if not t.is_primal_feasible():
        if not _dual_phase(t, [ZERO] * (t.ncols + 1)):
            return _finish(t, Status.INFEASIBLE, objective)
    return solve_primal_fractional(t, objective)
