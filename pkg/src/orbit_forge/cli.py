"""Command-line entry point.

    orbit-forge run <scenario-id> [--config <file>] [--seed N] [--out <path>]
    orbit-forge list

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error,
3 I/O failure while writing the report.

The config file is flat "key = value" text ('#' starts a comment).  Known
keys: space, l, x1, x2, c, d, lambda_grid, restarts, seed, max_iters,
tolerance.  lambda_grid is a comma-separated list of exact ratios, e.g.
"11/10, 3/2, 19/10".  Command-line flags override file values.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from fractions import Fraction

from .errors import DomainError, PreconditionError
from .reporting import emit_report
from .scenarios import REGISTRY, ScenarioConfig, run_scenario

_INT_KEYS = {"l", "restarts", "seed", "max_iters"}
_FLOAT_KEYS = {"x1", "x2", "c", "d", "tolerance"}


def _parse_config_text(text: str) -> dict:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected 'key = value'")
        key, val = (part.strip() for part in line.split("=", 1))
        if key in _INT_KEYS:
            values[key] = int(val)
        elif key in _FLOAT_KEYS:
            values[key] = float(val)
        elif key == "space":
            values[key] = val
        elif key == "lambda_grid":
            values[key] = tuple(Fraction(item.strip())
                                for item in val.split(",") if item.strip())
        else:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
    return values


def load_config(path: str | None, seed_override: int | None = None) -> ScenarioConfig:
    values: dict = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            values = _parse_config_text(fh.read())
    if seed_override is not None:
        values["seed"] = seed_override
    return dataclasses.replace(ScenarioConfig(), **values)


def _cmd_list() -> int:
    width = max(len(sid) for sid in REGISTRY)
    for sid, spec in REGISTRY.items():
        print(f"{sid.ljust(width)}  {spec.description}")
    return 0


def _cmd_run(args) -> int:
    if args.scenario_id not in REGISTRY:
        print(f"orbit-forge: unknown scenario {args.scenario_id!r}; "
              f"see 'orbit-forge list'", file=sys.stderr)
        return 2
    try:
        cfg = load_config(args.config, args.seed)
    except (OSError, DomainError, ValueError) as exc:
        print(f"orbit-forge: bad config: {exc}", file=sys.stderr)
        return 2
    try:
        report = run_scenario(args.scenario_id, cfg)
    except (DomainError, PreconditionError) as exc:
        print(f"orbit-forge: scenario rejected its inputs: {exc}", file=sys.stderr)
        return 2
    try:
        emit_report(report, args.out)
    except OSError as exc:
        print(f"orbit-forge: cannot write report: {exc}", file=sys.stderr)
        return 3
    return 0 if report.all_passed else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="orbit-forge",
        description="Deterministic replication scenarios for the two "
                    "flag-manifold families.")
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run one scenario and emit its report")
    run_p.add_argument("scenario_id")
    run_p.add_argument("--config", default=None, help="flat key=value file")
    run_p.add_argument("--seed", type=int, default=None)
    run_p.add_argument("--out", default=None, help="report path (default stdout)")
    sub.add_parser("list", help="print the scenario registry")
    args = parser.parse_args(argv)
    if args.command == "list":
        return _cmd_list()
    return _cmd_run(args)


if __name__ == "__main__":
    sys.exit(main())
