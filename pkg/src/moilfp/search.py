"""Branch and bound with efficiency cuts for max psi over the integer efficient set.

Depth-first search. At an integer relaxation optimum the point is archived
and tested for efficiency; an efficient point closes its node (it is the
psi-optimum of the node's integer points), a non-efficient one triggers a
type-I cut built from the improving directions of the criteria, unless no
such direction exists or the node's ideal point is dominated by the archive.
Right branches also carry a type-II cut ``psi(x) >= psi_opt``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from . import _debug
from .bnb import maximize_integer, most_fractional
from .efficiency import (
    Archive,
    InsertOutcome,
    archive_insert,
    efficiency_test,
    ideal_dominated,
    ideal_point,
)
from .errors import EmptyDelta, EmptyDomain, NoFractionalCoordinate
from .model import (
    Instance,
    Rational,
    eval_criteria,
    eval_fractional,
    floor,
    fmt,
    fmt_point,
    rational,
)
from .simplex import Status, Tableau, add_row, reoptimize_dual


class NodeKind(Enum):
    BRANCHING = "branching"
    CUT = "cut"


class RowTag(Enum):
    BRANCH_LE = "branch-le"
    BRANCH_GE = "branch-ge"
    CUT_I = "cut-I"
    CUT_II = "cut-II"


@dataclass(frozen=True)
class Row:
    """Sparse row ``sum(c_j x_j) (rel) rhs`` over tableau columns (structural first)."""

    coeffs: tuple  # ((column, coefficient), ...)
    rel: str
    rhs: Rational
    tag: RowTag

    def as_mapping(self) -> dict:
        return dict(self.coeffs)

    def lhs(self, values) -> Rational:
        return sum((c * values[j] for j, c in self.coeffs), Rational(0))

    def satisfied(self, values) -> bool:
        v = self.lhs(values)
        return v <= self.rhs if self.rel == "le" else v >= self.rhs

    def scaled_to_integers(self) -> "Row":
        """Same inequality multiplied by the lcm of all denominators."""
        scale = 1
        for _, c in self.coeffs:
            scale = math.lcm(scale, int(c.denominator))
        scale = math.lcm(scale, int(self.rhs.denominator))
        return Row(tuple((j, c * scale) for j, c in self.coeffs), self.rel, self.rhs * scale, self.tag)

    def __str__(self):
        text = ""
        for j, c in self.coeffs:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = f"x{j + 1}" if mag == 1 else f"{fmt(mag)}*x{j + 1}"
            text = (f"-{term}" if sign == "-" else term) if not text else f"{text} {sign} {term}"
        op = "<=" if self.rel == "le" else ">="
        return f"{text or '0'} {op} {fmt(self.rhs)}"


@dataclass(frozen=True)
class Node:
    id: int
    parent: Optional[int]
    kind: NodeKind
    rows: tuple  # every row added since the root, in column order
    depth: int = 0


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    INCOMPLETE = "incomplete"


@dataclass
class TraceEvent:
    node: Optional[int]
    parent: Optional[int]
    kind: str
    action: str
    data: dict = field(default_factory=dict)
    rows: tuple = field(default=(), repr=False)  # node rows before a cut-I row, for audits

    def line(self) -> str:
        parts = [f"node={'-' if self.node is None else self.node}",
                 f"parent={'-' if self.parent is None else self.parent}",
                 f"kind={self.kind}", f"action={self.action}"]
        for key, val in self.data.items():
            if isinstance(val, bool):
                val = str(val).lower()
            elif isinstance(val, tuple):
                val = fmt_point(val)
            elif hasattr(val, "denominator"):
                val = fmt(val)
            parts.append(f"{key}={val}")
        return " ".join(parts)


@dataclass
class SolveOptions:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    trace: bool = False
    on_event: Optional[Callable] = None  # called with every TraceEvent


@dataclass
class SolveReport:
    """Outcome of :func:`solve`. ``psi_opt is None`` stands for minus infinity."""

    status: SolveStatus
    x_opt: Optional[tuple]
    psi_opt: Optional[Rational]
    efficient_found: list
    created_nodes: int
    saturated_nodes: int
    pivots: int
    wall_time: float
    step0_point: Optional[tuple] = None
    step0_verdict: object = None
    finished_at_step0: bool = False
    incumbents: list = field(default_factory=list)  # (x, psi) in update order
    archive: Archive = field(default_factory=Archive)
    test_nodes: int = 0
    trace: Optional[list] = None

    @property
    def efficient_count(self) -> int:
        return len(self.efficient_found)

    @property
    def sn_cn_percent(self) -> float:
        return 100.0 * self.saturated_nodes / self.created_nodes if self.created_nodes else 0.0


# -- cut and branching rows -------------------------------------------------

def build_delta(t: Tableau, k: int) -> list:
    """Nonbasic columns improving some criterion, plus those neutral for all criteria."""
    nb = t.nonbasic()
    grads = [t.reduced_gradients(i, nb) for i in range(k)]
    delta = []
    for pos, j in enumerate(nb):
        col = [g[pos] for g in grads]
        if any(v > 0 for v in col) or all(v == 0 for v in col):
            delta.append(j)
    return delta


def cut_type_I(delta) -> Row:
    if not delta:
        raise EmptyDelta("type-I cut needs a nonempty improving set")
    return Row(tuple((j, Rational(1)) for j in sorted(delta)), "ge", Rational(1), RowTag.CUT_I)


def cut_type_II(inst: Instance, psi_opt) -> Row:
    """Linearisation of ``psi(x) >= psi_opt`` valid under a positive denominator."""
    psi_opt = rational(psi_opt)
    ms = inst.master
    coeffs = tuple((j, c - psi_opt * d) for j, (c, d) in enumerate(zip(ms.num, ms.den)) if c - psi_opt * d)
    return Row(coeffs, "ge", psi_opt * ms.den_const - ms.num_const, RowTag.CUT_II)


def branch_rows(x, psi_opt=None, inst: Optional[Instance] = None):
    """Rows for the two children of a fractional relaxation point ``x``.

    Returns ``(j, left_rows, right_rows)``. The right child also receives a
    type-II cut, scaled to integer coefficients so its surplus is integral
    at integer points.
    """
    j = most_fractional(x)
    if j is None:
        raise NoFractionalCoordinate("relaxation point is integral")
    f = floor(x[j])
    left = (Row(((j, Rational(1)),), "le", Rational(f), RowTag.BRANCH_LE),)
    right = (Row(((j, Rational(1)),), "ge", Rational(f + 1), RowTag.BRANCH_GE),)
    if psi_opt is not None and inst is not None:
        right += (cut_type_II(inst, psi_opt).scaled_to_integers(),)
    return j, left, right


def branch(node: Node, t: Tableau, next_id: int, psi_opt=None, inst=None):
    """Children ``(left, right)`` of ``node``; ids ``next_id`` and ``next_id + 1``."""
    _, left, right = branch_rows(t.point(), psi_opt, inst)
    return (
        Node(next_id, node.id, NodeKind.BRANCHING, node.rows + left, node.depth + 1),
        Node(next_id + 1, node.id, NodeKind.BRANCHING, node.rows + right, node.depth + 1),
    )


def apply_rows(t: Tableau, rows) -> Tableau:
    for row in rows:
        add_row(t, row.as_mapping(), row.rel, row.rhs)
    return t


def column_values(inst: Instance, rows, x) -> tuple:
    """Values of every tableau column at structural point ``x``: x, root slacks, added-row slacks."""
    vals = list(x)
    for a, b in inst.standard_rows():
        vals.append(b - sum((c * v for c, v in zip(a, x)), Rational(0)))
    for row in rows:
        lhs = row.lhs(vals)
        vals.append(row.rhs - lhs if row.rel == "le" else lhs - row.rhs)
    return tuple(vals)


def root_tableau(inst: Instance) -> Tableau:
    return Tableau.build(inst.standard_rows(), inst.n, inst.objectives)


def node_tableau(inst: Instance, rows) -> Tableau:
    """Rebuild a node's relaxation from the root by replaying its rows."""
    return apply_rows(root_tableau(inst), rows)


# -- Step 0 ----------------------------------------------------------------

@dataclass
class Step0Result:
    finished: bool
    point: tuple  # integer psi-maximiser over D
    verdict: object
    incumbent: tuple
    psi: Rational
    created: int
    fathomed: int
    pivots: int
    test_nodes: int


def step0(inst: Instance) -> Step0Result:
    """Integer psi-optimum over D, tested for efficiency."""
    t = Tableau.build(inst.standard_rows(), inst.n, [inst.master])
    res = maximize_integer(t, 0)
    if res.point is None:
        raise EmptyDomain("no integer point satisfies the constraints")
    verdict = efficiency_test(inst, res.point)
    if verdict.efficient:
        inc, psi = res.point, res.value
    else:
        inc = verdict.witness[0]
        psi = eval_fractional(inst.master, inc)
    return Step0Result(verdict.efficient, res.point, verdict, inc, psi,
                       res.created, res.fathomed, res.pivots, verdict.nodes)


# -- main loop -------------------------------------------------------------

class _Search:
    def __init__(self, inst: Instance, opts: SolveOptions):
        self.inst = inst
        self.opts = opts
        self.k = inst.k
        self.psi = inst.k  # objective index of psi in node tableaus
        self.archive = Archive()
        self.x_opt = None
        self.psi_opt = None
        self.efficient = []
        self.incumbents = []
        self.trace = [] if opts.trace else None
        self.created = 0
        self.saturated = 0
        self.pivots = 0
        self.test_nodes = 0
        self.next_id = 0

    def emit(self, node, action, rows=(), **data):
        if self.trace is None and self.opts.on_event is None:
            return
        ev = TraceEvent(node.id if node else None, node.parent if node else None,
                        node.kind.value if node else "step0", action, data, rows)
        if self.trace is not None:
            self.trace.append(ev)
        if self.opts.on_event is not None:
            self.opts.on_event(ev)

    def new_id(self):
        i = self.next_id
        self.next_id += 1
        self.created += 1
        return i

    def mark_efficient(self, x):
        if x not in self.efficient:
            self.efficient.append(x)

    def offer(self, x, node):
        """Incumbent update with an efficient point."""
        value = eval_fractional(self.inst.master, x)
        if self.psi_opt is None or value > self.psi_opt:
            if _debug.ENABLED and self.psi_opt is not None:
                _debug.check(value >= self.psi_opt, "incumbent value decreased")
            self.psi_opt = value
            self.x_opt = x
            self.incumbents.append((x, value))
            self.emit(node, "incumbent-update", point=x, psi=value)

    def fathom(self, node, reason, **data):
        self.saturated += 1
        self.emit(node, f"fathomed:{reason}", **data)

    def run(self, deadline) -> bool:
        inst = self.inst
        root = Node(self.new_id(), None, NodeKind.BRANCHING, (), 0)
        stack = [(root, None, ())]
        while stack:
            if self.opts.max_nodes is not None and self.created > self.opts.max_nodes:
                return False
            if deadline is not None and time.perf_counter() > deadline:
                return False
            node, parent_t, new_rows = stack.pop()
            t = root_tableau(inst) if parent_t is None else apply_rows(parent_t.copy(), new_rows)
            before = t.pivots
            sol = reoptimize_dual(t, self.psi)
            self.pivots += t.pivots - before
            while True:
                if sol.status is Status.INFEASIBLE:
                    self.fathom(node, "infeasible")
                    break
                x, value = sol.point, sol.value
                self.emit(node, "relaxed", point=x, psi=value)
                if self.psi_opt is not None and self.psi_opt >= value:
                    self.fathom(node, "bound", psi=value)
                    break
                if most_fractional(x) is not None:
                    (left, lrows), (right, rrows) = self._branch(node, t)
                    stack.append((right, t, rrows))
                    stack.append((left, t, lrows))
                    break
                node_or_none = self._integer_point(node, t, x)
                if node_or_none is None:
                    break
                node = node_or_none
                before = t.pivots
                sol = reoptimize_dual(t, self.psi)
                self.pivots += t.pivots - before
                if deadline is not None and time.perf_counter() > deadline:
                    return False
        return True

    def _branch(self, node, t):
        j, lrows, rrows = branch_rows(t.point(), self.psi_opt, self.inst)
        left = Node(self.new_id(), node.id, NodeKind.BRANCHING, node.rows + lrows, node.depth + 1)
        right = Node(self.new_id(), node.id, NodeKind.BRANCHING, node.rows + rrows, node.depth + 1)
        self.emit(node, "branched", var=f"x{j + 1}", left=left.id, right=right.id)
        if len(rrows) > 1:
            self.emit(right, "cut-II", row=str(rrows[-1]))
        return (left, lrows), (right, rrows)

    def _integer_point(self, node, t, x):
        """Steps 3.2 to 5 at an integer relaxation optimum; returns the cut child or None."""
        inst = self.inst
        z = eval_criteria(inst, x)
        self.emit(node, "integer-point", point=x, z=z)
        self.archive, outcome = archive_insert(self.archive, x, z)
        if outcome is InsertOutcome.KEPT:
            verdict = efficiency_test(inst, x)
            self.test_nodes += verdict.nodes
            if verdict.efficient:
                self.mark_efficient(x)
                self.offer(x, node)
                self.fathom(node, "efficient", point=x)
                return None
            y, zy = verdict.witness
            self.archive, _ = archive_insert(self.archive, y, zy)
            self.mark_efficient(y)
            self.offer(y, node)
        delta = build_delta(t, self.k)
        if not delta:
            self.fathom(node, "delta-empty")
            return None
        ideal = ideal_point(t, self.k)
        if ideal_dominated(ideal, self.archive):
            self.fathom(node, "ideal-dominated", ideal=ideal)
            return None
        cut = cut_type_I(delta)
        child = Node(self.new_id(), node.id, NodeKind.CUT, node.rows + (cut,), node.depth + 1)
        self.emit(child, "cut-I", rows=node.rows, row=str(cut), point=x, ideal=ideal, psi_opt=self.psi_opt)
        add_row(t, cut.as_mapping(), cut.rel, cut.rhs)
        return child


def solve(inst: Instance, opts: Optional[SolveOptions] = None) -> SolveReport:
    opts = opts or SolveOptions()
    started = time.perf_counter()
    deadline = started + opts.max_seconds if opts.max_seconds is not None else None
    s = _Search(inst, opts)
    s0 = step0(inst)
    s.created += s0.created
    s.saturated += s0.fathomed
    s.pivots += s0.pivots
    s.test_nodes += s0.verdict.nodes
    s.emit(None, "step0", point=s0.point, efficient=s0.verdict.efficient)
    s.archive, _ = archive_insert(s.archive, s0.incumbent, eval_criteria(inst, s0.incumbent))
    s.mark_efficient(s0.incumbent)
    s.offer(s0.incumbent, None)
    complete = True
    if not s0.finished:
        complete = s.run(deadline)
    return SolveReport(
        status=SolveStatus.OPTIMAL if complete else SolveStatus.INCOMPLETE,
        x_opt=s.x_opt,
        psi_opt=s.psi_opt,
        efficient_found=list(s.efficient),
        created_nodes=s.created,
        saturated_nodes=s.saturated,
        pivots=s.pivots,
        wall_time=time.perf_counter() - started,
        step0_point=s0.point,
        step0_verdict=s0.verdict,
        finished_at_step0=s0.finished,
        incumbents=list(s.incumbents),
        archive=s.archive,
        test_nodes=s.test_nodes,
        trace=s.trace,
    )
