"""Golden walkthrough of the bundled worked example.

Each check compares a solver intermediate against a reference value. The
reference Step-0 incumbent is not efficient (a feasible point dominates it),
so a sound solver cannot return it; that check is reported as failing and
a companion check confirms the point is the first efficiency-test maximiser.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .model import Rational, eval_criteria, eval_fractional, fmt, fmt4, fmt_point
from .search import (
    RowTag,
    Row,
    SolveOptions,
    build_delta,
    node_tableau,
    root_tableau,
    solve,
    step0,
)
from . import oracle
from .efficiency import ideal_point
from .simplex import reoptimize_dual


def q(a, b=1):
    return Rational(a, b)


ROOT_POINT = (q(0), q(0), q(22, 7), q(0), q(0), q(0))
ROOT_PSI = q(2126, 355)
STEP0_POINT = (0, 1, 0, 12, 0, 0)
STEP0_PSI = q(724, 617)
STEP0_Z = (q(1286, 876), q(604, 421))
NODE1_POINT = (0, 0, 3, 0, 0, 0)
NODE1_PSI = q(290, 49)
DELTA1 = (1, 2, 4, 6)  # 1-based
CUT1 = "x1 + x2 + x4 + x6 >= 1"
IDEAL1 = ("7.2632", "1.7566")
PRINTED_ANSWERS = ("1.4595", "1.6121")
PRINTED_POINTS = ((4, 0, 0, 2, 0, 0), (4, 0, 0, 0, 0, 0))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def walkthrough(inst) -> list:
    """Run every golden check on ``inst`` (the bundled example); returns a list of :class:`Check`."""
    out = []
    started = time.perf_counter()

    t = root_tableau(inst)
    sol = reoptimize_dual(t, inst.k)
    out.append(Check("root relaxation", sol.point == ROOT_POINT and sol.value == ROOT_PSI,
                     f"{fmt_point(sol.point)} psi={fmt(sol.value)}"))

    s0 = step0(inst)
    z_inc = eval_criteria(inst, s0.incumbent)
    ok = s0.incumbent == STEP0_POINT and s0.psi == STEP0_PSI and z_inc == STEP0_Z
    out.append(Check("step-0 incumbent", ok,
                     f"{fmt_point(s0.incumbent)} psi={fmt(s0.psi)} z={fmt_point(z_inc)}; "
                     f"reference {fmt_point(STEP0_POINT)} psi={fmt(STEP0_PSI)} is dominated"))
    first = s0.verdict.chain[0] if s0.verdict.chain else None
    ok = (first == STEP0_POINT and eval_fractional(inst.master, first) == STEP0_PSI
          and eval_criteria(inst, first) == STEP0_Z)
    out.append(Check("first efficiency-test maximiser", ok,
                     f"{fmt_point(first) if first else '-'} from psi-maximiser {fmt_point(s0.point)}"))

    branch = Row(((2, q(1)),), "le", q(3), RowTag.BRANCH_LE)
    t1 = node_tableau(inst, [branch])
    sol1 = reoptimize_dual(t1, inst.k)
    out.append(Check("node-1 integer point", sol1.point == NODE1_POINT and sol1.value == NODE1_PSI,
                     f"{fmt_point(sol1.point)} psi={fmt(sol1.value)}"))

    delta = tuple(j + 1 for j in build_delta(t1, inst.k))
    out.append(Check("improving set at node 1", delta == DELTA1, "{" + ",".join(map(str, delta)) + "}"))

    rep = solve(inst, SolveOptions(trace=True))
    cut = next((e.data["row"] for e in rep.trace if e.action == "cut-I"), None)
    out.append(Check("first type-I cut", cut == CUT1, str(cut)))

    ideal = tuple(fmt4(v) for v in ideal_point(t1, inst.k))
    out.append(Check("ideal point at node 1", ideal == IDEAL1, "(" + ", ".join(ideal) + ")"))

    relaxed = next(e for e in rep.trace if e.action == "relaxed")
    out.append(Check("first traced relaxation", relaxed.data["point"] == ROOT_POINT,
                     fmt_point(relaxed.data["point"])))

    elapsed = time.perf_counter() - started
    out.append(Check("runtime under 5 s", elapsed < 5.0, f"{elapsed:.2f} s"))
    truth = oracle.enumerate(inst)
    ok = truth.best is not None and rep.psi_opt == truth.best[1] and truth.is_efficient(rep.x_opt)
    out.append(Check("final answer matches enumeration", ok,
                     f"x_opt={fmt_point(rep.x_opt)} psi_opt={fmt(rep.psi_opt)} ({fmt4(rep.psi_opt)}); "
                     f"reference {' and '.join(PRINTED_ANSWERS)}"))
    return out


def adjudication(inst, rep, truth) -> str:
    """Golden record: solver and enumeration results against the two reference answers."""
    lines = [
        f"solver x_opt {fmt_point(rep.x_opt)}",
        f"solver psi_opt {fmt(rep.psi_opt)} ({fmt4(rep.psi_opt)})",
        f"oracle best {fmt_point(truth.best[0])} psi={fmt(truth.best[1])} ({fmt4(truth.best[1])})",
        f"oracle efficient {len(truth.efficient)} of {len(truth.feasible)} feasible",
        f"solver matches oracle {'yes' if rep.psi_opt == truth.best[1] else 'no'}",
    ]
    for printed, x in zip(PRINTED_ANSWERS, PRINTED_POINTS):
        v = eval_fractional(inst.master, x)
        verdict = "efficient" if truth.is_efficient(x) else "not efficient"
        agrees = "agrees" if v == truth.best[1] else "disagrees"
        lines.append(f"reference {printed} at {fmt_point(x)}: psi={fmt(v)} ({fmt4(v)}), {verdict}, {agrees}")
    return "\n".join(lines) + "\n"
