"""Batch solving and per-(n, m, k) aggregation."""
from __future__ import annotations

import json
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .fileformat import load
from .model import fmt
from .search import SolveOptions, solve

COLUMNS = (
    "n", "m", "k",
    "mean_cpu_s", "min_cpu_s", "max_cpu_s",
    "mean_eff_sol", "min_eff_sol", "max_eff_sol",
    "mean_cn", "mean_sn_cn_pct",
)


@dataclass(frozen=True)
class InstanceResult:
    name: str
    n: int
    m: int
    k: int
    status: str  # optimal, incomplete, or error
    seconds: float = 0.0
    eff_sol: int = 0
    cn: int = 0
    sn: int = 0
    psi_opt: Optional[str] = None
    x_opt: Optional[list] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    k: int
    mean_cpu_s: float
    min_cpu_s: float
    max_cpu_s: float
    mean_eff_sol: float
    min_eff_sol: int
    max_eff_sol: int
    mean_cn: float
    mean_sn_cn_pct: float
    solved: int
    failed: int

    def cells(self) -> list:
        return [
            str(self.n), str(self.m), str(self.k),
            f"{self.mean_cpu_s:.2f}", f"{self.min_cpu_s:.2f}", f"{self.max_cpu_s:.2f}",
            f"{self.mean_eff_sol:.2f}", str(self.min_eff_sol), str(self.max_eff_sol),
            f"{self.mean_cn:.2f}", f"{self.mean_sn_cn_pct:.2f}",
        ]


def solve_file(path, max_nodes=None, max_seconds=None) -> InstanceResult:
    path = Path(path)
    try:
        inst = load(path)
    except Exception as exc:  # recorded, aggregation continues
        return InstanceResult(path.stem, 0, 0, 0, "error", error=f"{type(exc).__name__}: {exc}")
    try:
        rep = solve(inst, SolveOptions(max_nodes=max_nodes, max_seconds=max_seconds))
    except Exception as exc:
        return InstanceResult(inst.name, inst.n, inst.m, inst.k, "error", error=f"{type(exc).__name__}: {exc}")
    return InstanceResult(
        inst.name, inst.n, inst.m, inst.k, rep.status.value, rep.wall_time,
        rep.efficient_count, rep.created_nodes, rep.saturated_nodes,
        None if rep.psi_opt is None else fmt(rep.psi_opt),
        None if rep.x_opt is None else [int(v) for v in rep.x_opt],
    )


def run(paths, jobs: int = 1, max_nodes=None, max_seconds=None) -> list:
    """Solve every file; results are sorted by instance name."""
    paths = sorted(Path(p) for p in paths)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(solve_file, p, max_nodes, max_seconds) for p in paths]
            results = [f.result() for f in futures]
    else:
        results = [solve_file(p, max_nodes, max_seconds) for p in paths]
    return sorted(results, key=lambda r: r.name)


def aggregate(results) -> list:
    groups = {}
    for r in results:
        if r.status != "error":
            groups.setdefault((r.n, r.m, r.k), []).append(r)
    failed = {}
    for r in results:
        if r.status != "optimal":
            failed[(r.n, r.m, r.k)] = failed.get((r.n, r.m, r.k), 0) + 1
    rows = []
    for key in sorted(groups):
        rs = groups[key]
        secs = [r.seconds for r in rs]
        effs = [r.eff_sol for r in rs]
        rows.append(BenchRow(
            *key,
            statistics.fmean(secs), min(secs), max(secs),
            statistics.fmean(effs), min(effs), max(effs),
            statistics.fmean(r.cn for r in rs),
            statistics.fmean(100.0 * r.sn / r.cn if r.cn else 0.0 for r in rs),
            solved=sum(r.status == "optimal" for r in rs),
            failed=failed.get(key, 0),
        ))
    return rows


def render_tsv(rows) -> str:
    lines = ["\t".join(COLUMNS)]
    lines.extend("\t".join(r.cells()) for r in rows)
    return "\n".join(lines) + "\n"


def write_json(path, rows, results) -> None:
    payload = {"rows": [asdict(r) for r in rows], "instances": [asdict(r) for r in results]}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
