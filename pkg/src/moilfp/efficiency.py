"""Potentially-efficient archive, the efficiency-test ILP and node ideal points."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bnb import maximize_integer
from .errors import EmptyDomain
from .model import ZERO, FractionalObjective, Instance, dominates, eval_criteria
from .simplex import Status, Tableau, solve_primal_fractional


class InsertOutcome(Enum):
    KEPT = "kept"
    DOMINATED = "dominated"


@dataclass(frozen=True)
class Archive:
    """Mutually non-dominated ``(point, criterion vector)`` pairs."""

    entries: tuple = ()

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def points(self):
        return [x for x, _ in self.entries]

    @property
    def vectors(self):
        return [z for _, z in self.entries]


def archive_insert(arch: Archive, x, z) -> tuple:
    """Return ``(new_archive, outcome)``; entries dominated by ``z`` are dropped."""
    for p, v in arch.entries:
        if dominates(v, z):
            return arch, InsertOutcome.DOMINATED
        if p == x:
            return arch, InsertOutcome.KEPT
    kept = tuple((p, v) for p, v in arch.entries if not dominates(z, v))
    return Archive(kept + ((tuple(x), tuple(z)),)), InsertOutcome.KEPT


def ideal_dominated(ideal, arch: Archive) -> bool:
    return any(dominates(v, ideal) for _, v in arch.entries)


@dataclass(frozen=True)
class EfficiencyVerdict:
    efficient: bool
    witness: Optional[tuple] = None  # (point, criterion vector), efficient, dominates the tested point
    chain: tuple = ()  # successive test maximisers, first one included
    optimum: object = ZERO  # optimum of the first test program
    nodes: int = 0
    pivots: int = 0


def gap_program(inst: Instance, z_ref):
    """Linear objective and rows of the test ILP around the criterion vector ``z_ref``.

    Each gap ``num_i(x) - z_i(ref) * den_i(x)`` has the sign of
    ``z_i(x) - z_i(ref)`` because denominators are positive.
    """
    n = inst.n
    weights = [ZERO] * n
    const = ZERO
    rows = list(inst.standard_rows())
    for c, zi in zip(inst.criteria, z_ref):
        gap = [p - zi * q for p, q in zip(c.num, c.den)]
        gap_const = c.num_const - zi * c.den_const
        weights = [w + g for w, g in zip(weights, gap)]
        const += gap_const
        rows.append((tuple(-g for g in gap), gap_const))
    return FractionalObjective.linear(weights, const), rows


def _maximise_gaps(inst: Instance, z_ref):
    obj, rows = gap_program(inst, z_ref)
    t = Tableau.build(rows, inst.n, [obj])
    return maximize_integer(t, 0, lower=ZERO)


def efficiency_test(inst: Instance, x_star) -> EfficiencyVerdict:
    """Decide whether ``x_star`` is efficient; if not, return an efficient point dominating it.

    The test ILP maximises the sum of linearised criterion gaps over D with
    all gaps nonnegative. Zero optimum certifies efficiency. Otherwise the
    maximiser dominates ``x_star`` but need not be efficient itself, so the
    test is repeated from it until the optimum is zero.
    """
    x = tuple(x_star)
    z = eval_criteria(inst, x)
    chain = []
    nodes = pivots = 0
    first_opt = None
    while True:
        res = _maximise_gaps(inst, z)
        nodes += res.created
        pivots += res.pivots
        if first_opt is None:
            first_opt = res.value if res.point is not None else ZERO
        if res.point is None:
            break
        x = res.point
        z = eval_criteria(inst, x)
        chain.append(x)
    if not chain:
        return EfficiencyVerdict(True, None, (), ZERO, nodes, pivots)
    return EfficiencyVerdict(False, (x, z), tuple(chain), first_opt, nodes, pivots)


def ideal_point(t: Tableau, k: int) -> tuple:
    """Componentwise maxima of criteria ``0..k-1`` over the tableau's continuous domain.

    ``t`` must be primal feasible and is left untouched.
    """
    if not t.is_primal_feasible():
        raise EmptyDomain("ideal point needs a feasible node relaxation")
    out = []
    for i in range(k):
        sol = solve_primal_fractional(t.copy(), i)
        if sol.status is not Status.OPTIMAL:
            raise EmptyDomain(f"criterion {i + 1} unbounded on the node relaxation")
        out.append(sol.value)
    return tuple(out)
