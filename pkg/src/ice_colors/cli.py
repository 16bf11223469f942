"""Command-line entry point.

Subcommands: ``enumerate``, ``counts``, ``pn``, ``verify``, ``bench``.
Reports go to stdout (JSON unless CSV is requested), diagnostics to stderr.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage or resource error.
Exact values are printed as num/den strings, never floats.  A fixed seed
makes every report byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from .exact import format_fraction
from .lattice import count_table, enumerate_states, heights, render_state
from .pn import ConsistencyError, pn_consistent, positivity_report, symmetry_check
from .theta import ParamSampler
from .tpoly import pn_via_T
from .verify import (filali_suite, identity_suite, lattice_suite,
                     specialization_suite)

SUITES = ("lattice", "theta", "filali", "specialization", "all")


@dataclass
class RunConfig:
    command: str
    n: int = 1
    fmt: str = "json"
    output: str | None = None
    seed: int = 0
    trials: int = 20
    threads: int = 1
    time_budget: float | None = None
    suite: str = "all"
    dump: bool = False


class TimeBudget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeoutError("time budget exhausted")


def _default_threads() -> int:
    value = os.environ.get("ICE_COLORS_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ice-colors",
        description="Exact workbench for the reflecting-end 8VSOS model "
                    "and its three-color polynomials.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        if with_n:
            p.add_argument("--n", type=int, required=True, help="lattice half-size")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help="worker processes (env ICE_COLORS_THREADS)")
        p.add_argument("--time-budget", type=float, default=None,
                       help="abort with exit 2 after this many seconds")

    p = sub.add_parser("enumerate", help="count states, optionally dump them")
    common(p)
    p.add_argument("--dump", action="store_true",
                   help="print an ASCII arrows+heights grid per state")

    p = sub.add_parser("counts", help="aggregate the (m, l, k0, k1, k2) table")
    common(p)
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")

    p = sub.add_parser("pn", help="compute the polynomial with all cross-checks")
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, with_n=False)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=3,
                   help="largest half-size for the lattice suite")

    p = sub.add_parser("bench", help="time the main computations")
    common(p)
    return parser


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command)
    for name in ("n", "fmt", "output", "seed", "trials", "threads",
                 "time_budget", "suite", "dump"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_enumerate(cfg: RunConfig, budget: TimeBudget) -> int:
    if cfg.n < 0:
        print("n must be >= 0", file=sys.stderr)
        return 2
    total = 0
    dumps = []
    for state in enumerate_states(cfg.n):
        total += 1
        if cfg.dump:
            dumps.append(render_state(state, heights(state)))
        if total % 1024 == 0:
            budget.check()
    if cfg.dump:
        _emit("\n".join(dumps) + f"\nstates: {total}", cfg)
    else:
        _emit(json.dumps({"n": cfg.n, "states": total}), cfg)
    return 0


def _cmd_counts(cfg: RunConfig, budget: TimeBudget) -> int:
    if cfg.n < 0:
        print("n must be >= 0", file=sys.stderr)
        return 2
    table = count_table(cfg.n, workers=cfg.threads)
    budget.check()
    _emit(table.to_csv() if cfg.fmt == "csv" else table.to_json(), cfg)
    return 0


def _cmd_pn(cfg: RunConfig, budget: TimeBudget) -> int:
    if cfg.n < 1:
        print("pn needs n >= 1", file=sys.stderr)
        return 2
    from .pn import VARIANTS

    table = count_table(cfg.n, workers=cfg.threads)
    budget.check()
    try:
        poly = pn_consistent(cfg.n, table)
    except ConsistencyError as err:
        print(f"consistency failure: {err}", file=sys.stderr)
        return 1
    budget.check()
    variants_checked = [
        f"{v.tag}:m={m}" for v in VARIANTS for m in range(cfg.n + 1)
        if v.binomial(cfg.n, m) != 0
    ]
    negative = positivity_report(poly)
    report = {
        "n": cfg.n,
        "degree": max(poly.degree, 0),
        "coeffs": [format_fraction(c) for c in poly.coeffs],
        "variants_checked": variants_checked,
        "symmetry_ok": symmetry_check(poly, cfg.n),
        "negative_coeffs": [[i, format_fraction(c)] for i, c in negative],
    }
    _emit(json.dumps(report), cfg)
    return 0 if report["symmetry_ok"] and not negative else 1


def _cmd_verify(cfg: RunConfig, budget: TimeBudget) -> int:
    sampler = ParamSampler(cfg.seed)
    reports = []
    if cfg.suite in ("lattice", "all"):
        reports += lattice_suite(max_n=cfg.n)
        budget.check()
    if cfg.suite in ("theta", "all"):
        reports += identity_suite(sampler, trials=max(cfg.trials, 100))
        budget.check()
    if cfg.suite in ("filali", "all"):
        reports += filali_suite(sampler, trials=cfg.trials)
        budget.check()
    if cfg.suite in ("specialization", "all"):
        reports += specialization_suite(sampler, trials=max(1, cfg.trials // 4))
        budget.check()
    _emit(json.dumps([r.to_record() for r in reports]), cfg)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_bench(cfg: RunConfig, budget: TimeBudget) -> int:
    timings = {}
    start = time.perf_counter()
    table = count_table(cfg.n, workers=cfg.threads)
    timings["count_table_s"] = time.perf_counter() - start
    budget.check()
    start = time.perf_counter()
    pn_via_T(cfg.n)
    timings["pn_via_T_s"] = time.perf_counter() - start
    budget.check()
    start = time.perf_counter()
    pn_consistent(cfg.n, table)
    timings["pn_consistent_s"] = time.perf_counter() - start
    timings["states"] = table.total()
    _emit(json.dumps({"n": cfg.n, **timings}), cfg)
    return 0


def run(cfg: RunConfig) -> int:
    if cfg.trials < 1:
        print("trials must be >= 1", file=sys.stderr)
        return 2
    budget = TimeBudget(cfg.time_budget)
    handler = {
        "enumerate": _cmd_enumerate,
        "counts": _cmd_counts,
        "pn": _cmd_pn,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }[cfg.command]
    try:
        return handler(cfg, budget)
    except TimeoutError:
        print("time budget exhausted", file=sys.stderr)
        return 2
    except ValueError as err:
        print(str(err), file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(parse_config(argv if argv is not None else sys.argv[1:])))


if __name__ == "__main__":
    main()
