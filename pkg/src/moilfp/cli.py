"""Command-line entry point.

Exit codes: 0 success, 1 selftest check failed, 2 parse or validation error,
3 incomplete (resource cap hit), 4 internal invariant breach.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import _debug, bench, oracle
from .errors import DimensionMismatch, InvariantError, ParseError, TooLarge, ValidationError
from .fileformat import load
from .generator import GenSpec, write
from .model import fmt, fmt4, fmt_point, validate_instance
from .search import SolveOptions, SolveStatus, solve

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3
EXIT_INVARIANT = 4


def _load_valid(path):
    inst = load(path)
    validate_instance(inst)
    return inst


def cmd_solve(args) -> int:
    inst = _load_valid(args.path)
    trace_file = open(args.trace, "w") if args.trace else None
    on_event = (lambda ev: trace_file.write(ev.line() + "\n")) if trace_file else None
    try:
        rep = solve(inst, SolveOptions(args.max_nodes, args.max_seconds, on_event=on_event))
    finally:
        if trace_file:
            trace_file.close()
    print(f"instance {inst.name}")
    print(f"status {rep.status.value}")
    if rep.x_opt is None:
        print("x_opt none")
    else:
        print(f"x_opt {fmt_point(rep.x_opt)}")
        print(f"psi_opt {fmt(rep.psi_opt)} ({fmt4(rep.psi_opt)})")
    print(f"efficient_found {rep.efficient_count}")
    print(f"created_nodes {rep.created_nodes}")
    print(f"saturated_nodes {rep.saturated_nodes}")
    print(f"wall_seconds {rep.wall_time:.2f}")
    return EXIT_OK if rep.status is SolveStatus.OPTIMAL else EXIT_INCOMPLETE


def cmd_oracle(args) -> int:
    inst = load(args.path)
    truth = oracle.enumerate(inst, cap=args.cap)
    sys.stdout.write(oracle.report(inst, truth))
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = GenSpec(args.n, args.m, args.k, args.seed, args.count)
    for path in write(spec, args.out):
        print(path)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.dir:
        paths = sorted(Path(args.dir).glob("*.moilfp"))
    else:
        if args.n is None or args.m is None or args.k is None:
            raise SystemExit("bench needs a directory or --n, --m and --k")
        paths = write(GenSpec(args.n, args.m, args.k, args.seed, args.count), args.corpus)
    results = bench.run(paths, jobs=args.jobs, max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    rows = bench.aggregate(results)
    table = bench.render_tsv(rows)
    sys.stdout.write(table)
    if args.out:
        Path(args.out).write_text(table)
    if args.json:
        bench.write_json(args.json, rows, results)
    for r in results:
        if r.status != "optimal":
            print(f"# {r.name}: {r.status} {r.error or ''}".rstrip(), file=sys.stderr)
    return EXIT_OK if all(r.status == "optimal" for r in results) else EXIT_INCOMPLETE


def cmd_selftest(args) -> int:
    from . import example_instance
    from .golden import walkthrough

    checks = walkthrough(example_instance())
    for c in checks:
        print(c.line())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moilfp", description=__doc__.splitlines()[0])
    p.add_argument("--debug", action="store_true", help="enable internal invariant checks")
    p.add_argument("-v", "--verbose", action="store_true", help="log simplex pivots")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="maximise psi over the integer efficient set")
    s.add_argument("path")
    s.add_argument("--trace", metavar="FILE", help="write the search event log")
    s.add_argument("--max-nodes", type=int)
    s.add_argument("--max-seconds", type=float)
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force enumeration of the efficient set")
    o.add_argument("path")
    o.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="maximum box volume")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("generate", help="write seeded random instances")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--out", default=".")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="solve a corpus and print the summary table")
    b.add_argument("dir", nargs="?", help="directory of .moilfp files")
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--count", type=int, default=10)
    b.add_argument("--corpus", default="corpus", help="where an inline spec writes its instances")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--max-nodes", type=int)
    b.add_argument("--max-seconds", type=float)
    b.add_argument("--out", help="also write the TSV table here")
    b.add_argument("--json", help="write rows and per-instance results as JSON")
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("selftest", help="run the worked-example walkthrough")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.debug:
        _debug.set_debug(True)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, ValidationError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except InvariantError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
