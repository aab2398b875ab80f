"""Brute-force ground truth: enumerate the integer box, filter feasibility, extract the efficient set.

Independent of the solver: the box comes from floating-point LPs (scipy),
feasibility is an integer matrix test (numpy), and dominance uses exact
rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import TooLarge, UnboundedDomain
from .model import Instance, dominates, eval_criteria, eval_fractional, fmt, fmt4, fmt_point

DEFAULT_CAP = 10 ** 7
_CHUNK = 1 << 18


@dataclass(frozen=True)
class EnumeratedTruth:
    box: tuple
    feasible: list
    efficient: list  # sorted lexicographically
    best: Optional[tuple]  # (point, psi) or None when D is empty

    def is_efficient(self, x) -> bool:
        return tuple(x) in self._efficient_set

    @property
    def _efficient_set(self):
        s = self.__dict__.get("_eset")
        if s is None:
            s = frozenset(self.efficient)
            object.__setattr__(self, "_eset", s)
        return s


def box_bounds(inst: Instance) -> Optional[tuple]:
    """Per-variable integer upper bounds over the continuous relaxation, or None if it is empty."""
    from scipy.optimize import linprog

    A = np.array([[float(v) for v in row] for row, _ in inst.standard_rows()])
    b = np.array([float(rhs) for _, rhs in inst.standard_rows()])
    bounds = []
    for j in range(inst.n):
        c = np.zeros(inst.n)
        c[j] = -1.0
        res = linprog(c, A_ub=A, b_ub=b, bounds=[(0, None)] * inst.n, method="highs")
        if res.status == 2:
            return None
        if res.status == 3:
            raise UnboundedDomain(f"x{j + 1} is unbounded")
        if res.status != 0:
            raise RuntimeError(f"bounding LP for x{j + 1} failed: {res.message}")
        bounds.append(max(0, math.floor(-res.fun + 1e-6)))
    return tuple(bounds)


def box_volume(box) -> int:
    return math.prod(u + 1 for u in box)


def _feasible_points(inst: Instance, box) -> list:
    rows = inst.standard_rows()
    A = np.array([[int(v) for v in a] for a, _ in rows], dtype=np.int64)
    b = np.array([int(rhs) for _, rhs in rows], dtype=np.int64)
    sizes = np.array([u + 1 for u in box], dtype=np.int64)
    total = int(np.prod(sizes))
    out = []
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        pts = np.stack(np.unravel_index(flat, tuple(sizes)), axis=1).astype(np.int64)
        ok = np.all(pts @ A.T <= b, axis=1)
        out.extend(tuple(int(v) for v in p) for p in pts[ok])
    return out


def efficient_subset(points, vectors) -> list:
    """Indices of points whose criterion vector no other vector dominates."""
    order = sorted(range(len(points)), key=lambda i: vectors[i], reverse=True)
    kept = []
    for i in order:
        v = vectors[i]
        if not any(dominates(vectors[j], v) for j in kept):
            kept.append(i)
    return kept


def enumerate(inst: Instance, box=None, cap: int = DEFAULT_CAP) -> EnumeratedTruth:  # noqa: A001
    """Exhaustive scan of the integer box; raises :class:`TooLarge` above ``cap`` points."""
    if any(not all(v.denominator == 1 for v in a) for a, _ in inst.standard_rows()):
        raise ValueError("oracle needs integral constraint data")
    if box is None:
        box = box_bounds(inst)
        if box is None:
            return EnumeratedTruth((), [], [], None)
    box = tuple(int(u) for u in box)
    if box_volume(box) > cap:
        raise TooLarge(f"box volume {box_volume(box)} exceeds cap {cap}")
    feasible = _feasible_points(inst, box)
    vecs = [eval_criteria(inst, x) for x in feasible]
    eff = sorted(feasible[i] for i in efficient_subset(feasible, vecs))
    best = None
    for x in eff:
        v = eval_fractional(inst.master, x)
        if best is None or v > best[1]:
            best = (x, v)
    return EnumeratedTruth(box, feasible, eff, best)


def report(inst: Instance, truth: EnumeratedTruth) -> str:
    lines = [
        f"instance {inst.name or '-'}",
        f"box {fmt_point(truth.box) if truth.box else '-'}",
        f"feasible {len(truth.feasible)}",
        f"efficient {len(truth.efficient)}",
    ]
    for x in truth.efficient:
        z = eval_criteria(inst, x)
        psi = eval_fractional(inst.master, x)
        lines.append(f"  {fmt_point(x)} z={fmt_point(z)} psi={fmt(psi)}")
    if truth.best is None:
        lines.append("best none")
    else:
        x, v = truth.best
        lines.append(f"best {fmt_point(x)} psi={fmt(v)} ({fmt4(v)})")
    return "\n".join(lines) + "\n"
