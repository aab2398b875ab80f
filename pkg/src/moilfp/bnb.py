"""Plain depth-first branch and bound over integer structural variables.

Used for Step 0 (maximise psi over D) and for the efficiency-test ILP. No
efficiency cuts here; nodes are fathomed by infeasibility, bound, or
integrality only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .model import floor, is_integral
from .simplex import Status, Tableau, add_row, reoptimize_dual


@dataclass
class IlpResult:
    point: Optional[tuple]
    value: Optional[object]
    created: int = 0
    fathomed: int = 0
    pivots: int = 0
    relaxations: list = field(default_factory=list)  # (point, value) per solved node, in order


def most_fractional(x) -> Optional[int]:
    """Index of the coordinate farthest from an integer; ties go to the lowest index."""
    best, arg = None, None
    for j, v in enumerate(x):
        if is_integral(v):
            continue
        frac = v - floor(v)
        dist = min(frac, 1 - frac)
        if best is None or dist > best:
            best, arg = dist, j
    return arg


def maximize_integer(t: Tableau, objective: int, lower=None, record=False) -> IlpResult:
    """Maximise ``objective`` over the integer points of ``t``'s domain.

    ``t`` is consumed. ``lower`` is a known achievable value: nodes whose
    relaxation does not exceed it are fathomed, and if nothing beats it the
    result has ``point=None``.
    """
    res = IlpResult(None, None, created=1)
    start_pivots = t.pivots
    best = lower
    stack = [(t, None)]
    while stack:
        parent, row = stack.pop()
        if row is None:
            node = parent
        else:
            node = parent.copy()
            add_row(node, *row)
        sol = reoptimize_dual(node, objective)
        res.pivots += node.pivots - (parent.pivots if row is not None else start_pivots)
        if record:
            res.relaxations.append((sol.point, sol.value))
        if sol.status is Status.UNBOUNDED:
            raise ValueError("integer program has an unbounded relaxation")
        if sol.status is Status.INFEASIBLE or (best is not None and sol.value <= best):
            res.fathomed += 1
            continue
        j = most_fractional(sol.point)
        if j is None:
            best = sol.value
            res.point, res.value = sol.point, sol.value
            res.fathomed += 1
            continue
        f = floor(sol.point[j])
        stack.append((node, ({j: 1}, "ge", f + 1)))
        stack.append((node, ({j: 1}, "le", f)))
        res.created += 2
    return res
