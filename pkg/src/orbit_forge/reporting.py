"""Machine-readable scenario reports.

One report is a JSON document with top-level fields exactly
{scenario_id, parameters, checks, wall_time_ms, seed}; every check carries
{name, expected, actual, tolerance, pass}.  Floats are serialized with 17
significant digits (lossless for binary64), exact rationals as "p/q"
strings, so a parsed report reconstructs the original values bit for bit.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    tolerance: object
    passed: bool


@dataclass(frozen=True)
class ScenarioReport:
    scenario_id: str
    parameters: dict
    checks: tuple
    wall_time_ms: int
    seed: int

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_close(name: str, expected, actual, tolerance) -> Check:
    passed = abs(float(actual) - float(expected)) <= float(tolerance)
    return Check(name, expected, actual, tolerance, passed)


def check_exact(name: str, expected, actual) -> Check:
    return Check(name, expected, actual, 0, expected == actual)


def check_true(name: str, condition: bool) -> Check:
    return Check(name, True, bool(condition), 0, bool(condition))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _encode_value(v) -> str:
    if isinstance(v, Fraction):
        return json.dumps(f"{v.numerator}/{v.denominator}")
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return repr(v)
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_encode_value(x) for x in v) + "]"
    if isinstance(v, dict):
        inner = ", ".join(f"{json.dumps(str(k))}: {_encode_value(x)}"
                          for k, x in v.items())
        return "{" + inner + "}"
    raise PreconditionError(f"cannot serialize value of type {type(v)!r}")


def render_report(report: ScenarioReport) -> str:
    checks = []
    for c in report.checks:
        checks.append(
            "{"
            + f"\"name\": {json.dumps(c.name)}, "
            + f"\"expected\": {_encode_value(c.expected)}, "
            + f"\"actual\": {_encode_value(c.actual)}, "
            + f"\"tolerance\": {_encode_value(c.tolerance)}, "
            + f"\"pass\": {_encode_value(c.passed)}"
            + "}"
        )
    body = (
        "{"
        + f"\"scenario_id\": {json.dumps(report.scenario_id)}, "
        + f"\"parameters\": {_encode_value(report.parameters)}, "
        + "\"checks\": [" + ", ".join(checks) + "], "
        + f"\"wall_time_ms\": {report.wall_time_ms}, "
        + f"\"seed\": {report.seed}"
        + "}"
    )
    return body + "\n"


def emit_report(report: ScenarioReport, sink=None) -> None:
    """Write the rendered report to a path, a file object, or stdout."""
    text = render_report(report)
    if sink is None:
        sys.stdout.write(text)
        return
    if hasattr(sink, "write"):
        sink.write(text)
        return
    with open(sink, "w", encoding="utf-8") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# parsing (round-trip support)
# ---------------------------------------------------------------------------

def _decode_value(v):
    if isinstance(v, str):
        parts = v.split("/")
        if (len(parts) == 2 and parts[1].isdigit()
                and parts[0].lstrip("-").isdigit()):
            return Fraction(int(parts[0]), int(parts[1]))
        return v
    if isinstance(v, list):
        return [_decode_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _decode_value(x) for k, x in v.items()}
    return v


def parse_report(text: str) -> ScenarioReport:
    raw = json.loads(text)
    checks = tuple(
        Check(c["name"], _decode_value(c["expected"]), _decode_value(c["actual"]),
              _decode_value(c["tolerance"]), c["pass"])
        for c in raw["checks"]
    )
    return ScenarioReport(raw["scenario_id"], _decode_value(raw["parameters"]),
                          checks, raw["wall_time_ms"], raw["seed"])
