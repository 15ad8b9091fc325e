import json
import subprocess
import sys
from fractions import Fraction

import pytest

from orbit_forge.cli import main
from orbit_forge.reporting import (
    Check,
    ScenarioReport,
    check_close,
    check_exact,
    emit_report,
    parse_report,
    render_report,
)
from orbit_forge.scenarios import REGISTRY, ScenarioConfig, run_scenario


def _sample_report():
    checks = (
        check_exact("exact-rational", Fraction(189, 32), Fraction(189, 32)),
        check_close("close-float", 1.0, 1.0 + 1e-12, 1e-9),
        Check("free-form", "yes", "yes", 0, True),
    )
    return ScenarioReport("sample", {"l": 3, "x1": 1.0}, checks, 12, 42)


def test_render_has_exact_top_level_fields():
    raw = json.loads(render_report(_sample_report()))
    assert set(raw.keys()) == {"scenario_id", "parameters", "checks",
                               "wall_time_ms", "seed"}
    assert set(raw["checks"][0].keys()) == {"name", "expected", "actual",
                                            "tolerance", "pass"}


def test_render_is_newline_terminated():
    assert render_report(_sample_report()).endswith("}\n")


def test_rationals_never_serialized_as_decimals():
    text = render_report(_sample_report())
    assert '"189/32"' in text
    assert "5.90625" not in text


def test_float_serialization_is_lossless():
    val = 1.0 / 3.0 + 1e-16
    rep = ScenarioReport("s", {}, (check_close("v", val, val, 0.0),), 0, 0)
    back = parse_report(render_report(rep))
    assert back.checks[0].expected == val


def test_roundtrip_identity():
    rep = _sample_report()
    back = parse_report(render_report(rep))
    assert back == rep


def test_empty_checks_are_valid():
    rep = ScenarioReport("empty", {}, (), 0, 7)
    raw = json.loads(render_report(rep))
    assert raw["checks"] == []


def test_emit_to_path(tmp_path):
    target = tmp_path / "report.json"
    emit_report(_sample_report(), str(target))
    assert parse_report(target.read_text()) == _sample_report()


def test_scenario_determinism():
    a = run_scenario("verify-vspom4", ScenarioConfig())
    b = run_scenario("verify-vspom4", ScenarioConfig())
    ra = render_report(a)
    rb = render_report(b)
    strip = lambda t, w: t.replace(f'"wall_time_ms": {w}', '"wall_time_ms": 0')
    assert strip(ra, a.wall_time_ms) == strip(rb, b.wall_time_ms)


def test_vspom4_report_shape():
    grid = (Fraction(11, 10), Fraction(3, 2), Fraction(19, 10))
    rep = run_scenario("verify-vspom4", ScenarioConfig(lambda_grid=grid))
    assert len(rep.checks) == 4 * len(grid)  # three identities plus the gap
    assert rep.all_passed
    text = render_report(rep)
    assert '"269/32"' in text
    assert '"5/8"' in text


def test_pinching_report_exact_endpoints():
    rep = run_scenario("pinching-report", ScenarioConfig())
    by_name = {c.name: c for c in rep.checks}
    assert by_name["pinching-at-equal-weights"].expected == Fraction(1, 16)
    assert by_name["pinching-at-double-weight"].expected == Fraction(1, 4)
    assert rep.all_passed


# ---------------------------------------------------------------------------
# CLI behaviour
# ---------------------------------------------------------------------------

def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for sid in REGISTRY:
        assert sid in out


def test_cli_unknown_scenario(capsys):
    assert main(["run", "no-such-scenario"]) == 2
    assert "unknown scenario" in capsys.readouterr().err


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_cli_run_writes_report(tmp_path, capsys):
    out = tmp_path / "pinching.json"
    code = main(["run", "pinching-report", "--seed", "7", "--out", str(out)])
    assert code == 0
    rep = parse_report(out.read_text())
    assert rep.scenario_id == "pinching-report"
    assert rep.seed == 7


def test_cli_io_failure_exit_code(tmp_path):
    bad = tmp_path / "missing-dir" / "report.json"
    code = main(["run", "pinching-report", "--out", str(bad)])
    assert code == 3


def test_cli_config_file_and_seed_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sample config\nlambda_grid = 11/10, 3/2\nseed = 5\n")
    out = tmp_path / "rep.json"
    code = main(["run", "verify-vspom4", "--config", str(cfg),
                 "--seed", "9", "--out", str(out)])
    assert code == 0
    rep = parse_report(out.read_text())
    assert rep.seed == 9  # command line beats the file
    assert len(rep.checks) == 8


def test_cli_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense-line\n")
    assert main(["run", "pinching-report", "--config", str(cfg)]) == 2


def test_cli_entrypoint_subprocess():
    proc = subprocess.run([sys.executable, "-m", "orbit_forge.cli", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify-vspom4" in proc.stdout


# ---------------------------------------------------------------------------
# registry completeness: every in-scope verification surface is covered
# ---------------------------------------------------------------------------

CLAIM_MANIFEST = {
    "canonical bases and reductive splits": "verify-bases",
    "inner-product invariance": "verify-embeddings",
    "matrix-algebra embeddings": "verify-embeddings",
    "geodesic characterization of the named so(7) vector": "verify-geodesic-vspom1",
    "uniqueness of the isotropy completion": "verify-geodesic-vspom1",
    "sp candidate geodesic relations": "verify-geodesic-vspom1",
    "exact coefficient identities and norm gap": "verify-vspom4",
    "orbit coincidence of the two named vectors": "orbit-refute-so7",
    "closed-form polynomials of the normal forms": "verify-prop-char",
    "three-case contradiction analysis": "verify-prop-main",
    "auxiliary strict inequality": "verify-prop-main",
    "numerical refutation on the so(7) instance": "orbit-refute-so7",
    "non-refutation sweep for the sp family": "orbit-sweep-sp",
    "curvature pinching table": "pinching-report",
}


def test_registry_covers_manifest():
    for claim, sid in CLAIM_MANIFEST.items():
        assert sid in REGISTRY, (claim, sid)


def test_every_scenario_is_claimed():
    claimed = set(CLAIM_MANIFEST.values())
    assert claimed == set(REGISTRY.keys())


def test_cli_exit_code_one_on_failed_check(tmp_path, monkeypatch, capsys):
    from orbit_forge import scenarios as scn
    from orbit_forge.reporting import check_true

    def failing(cfg):
        return {}, [check_true("always-fails", False)]

    spec = scn.ScenarioSpec("pinching-report", "patched to fail", failing)
    monkeypatch.setitem(scn.REGISTRY, "pinching-report", spec)
    out = tmp_path / "rep.json"
    assert main(["run", "pinching-report", "--out", str(out)]) == 1
    rep = parse_report(out.read_text())
    assert not rep.all_passed
