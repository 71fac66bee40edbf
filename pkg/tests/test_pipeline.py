"""
Session loading, the stage orchestrator, reports and the command line.
"""

import json

import pytest

from config.settings import settings
from main import main
from src.agents.base_agent import PipelineContext
from src.agents.derivation_agent import DerivationAgent
from src.algebra.errors import ConfigError, InputError
from src.cli.session import build_session
from src.orchestrator.pipeline_orchestrator import PipelineOrchestrator, exit_code_for
from src.report.models import Report, StageResult

FAST = {"samples": 2, "degree_bound": 4}


@pytest.fixture
def orchestrator(isolated_dirs):
    return PipelineOrchestrator()


# ----------------------------------------------------------------------
# sessions
# ----------------------------------------------------------------------

def test_session_from_example():
    session = build_session(example="cusp")
    assert session.name == "cusp"
    assert session.f == "x^3 - y^2"
    assert session.k == [1, 2, 3]
    assert session.seed == 7


def test_overrides_win():
    session = build_session(example="cusp", overrides={"k": [2], "seed": 11, "f": None})
    assert session.k == [2]
    assert session.seed == 11
    assert session.f == "x^3 - y^2"


def test_config_file_names_the_session(tmp_path):
    path = tmp_path / "my_curve.json"
    path.write_text(json.dumps({"vars": ["x", "y"], "f": "x*y", "weights": ["1/2", "1/2"]}))
    session = build_session(config_path=str(path))
    assert session.name == "my_curve"
    assert session.k == list(settings.DEFAULT_K)


@pytest.mark.parametrize("overrides", [
    {"vars": ["x", "x"]},
    {"weights": ["1/3"]},
    {"f": "x + w"},
    {"k": [-1]},
    {"seed": -3},
])
def test_invalid_sessions(overrides):
    with pytest.raises(ConfigError):
        build_session(example="cusp", overrides=overrides)


def test_unknown_example_lists_known_ones():
    with pytest.raises(ConfigError) as info:
        build_session(example="swallowtail")
    assert "cusp" in str(info.value)


def test_missing_and_malformed_config_files(tmp_path):
    with pytest.raises(ConfigError):
        build_session(config_path=str(tmp_path / "absent.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        build_session(config_path=str(bad))


# ----------------------------------------------------------------------
# orchestrator
# ----------------------------------------------------------------------

def test_exit_codes():
    ok = StageResult(stage="wqh", status="ok")
    failed = StageResult(stage="basis", status="failed")
    error = StageResult(stage="logder", status="error")
    assert exit_code_for([ok]) == 0
    assert exit_code_for([ok, failed]) == 1
    assert exit_code_for([failed, error]) == 2


def test_wqh_on_cusp(orchestrator):
    report = orchestrator.run("wqh", build_session(example="cusp"))
    assert report.exit_code == 0
    data = report.stage("wqh").data
    assert data["weight"] == "1/1"
    assert data["weight_rank"] == 2


def test_rescaled_weights_are_reported(orchestrator):
    session = build_session(example="cusp", overrides={"weights": ["2/3", "1"]})
    report = orchestrator.run("basis", session)
    assert report.exit_code == 0
    wqh = report.stage("wqh")
    assert list(wqh.data["normalized_weights"]) == ["1/3", "1/2"]
    assert any("rescaled" in d for d in wqh.diagnostics)


def test_non_wqh_fails_and_skips(orchestrator):
    session = build_session(overrides={"vars": ["x", "y"], "f": "x^2 + y^3", "weights": ["1", "1"]})
    report = orchestrator.run("spencer", session)
    assert report.exit_code == 1
    assert [s.status for s in report.stages] == ["failed", "skipped", "skipped"]


def test_constant_polynomial_is_an_input_error(orchestrator):
    session = build_session(overrides={"vars": ["x", "y"], "f": "3", "weights": ["1", "1"]})
    report = orchestrator.run("logder", session)
    assert report.exit_code == 2
    assert report.stage("wqh").status == "error"
    assert report.stage("logder").status == "skipped"


def test_logder_uses_normalized_weights(orchestrator):
    session = build_session(example="cusp", overrides={"weights": ["2/3", "1"]})
    report = orchestrator.run("logder", session)
    assert report.exit_code == 0
    stage = report.stage("logder")
    assert "1/6" in [g["weight"] for g in stage.data["theta_generators"]]
    assert all("theta_part" in g for g in stage.data["generators"])
    assert not any("splitting skipped" in d for d in stage.diagnostics)


def test_derivation_agent_alone_keeps_raw_weights():
    session = build_session(example="cusp", overrides={"weights": ["2/3", "1"]})
    result = DerivationAgent().run(PipelineContext.from_session(session))
    assert result.ok
    assert "theta_generators" not in result.data
    assert any("splitting skipped" in d for d in result.diagnostics)


def test_config_echo_renders_weights_as_fractions(orchestrator):
    session = build_session(overrides={"vars": ["x", "y"], "f": "x*y", "weights": ["1", "1/2"]})
    report = orchestrator.run("wqh", session)
    assert report.config["weights"] == ["1/1", "1/2"]
    assert "weights = (1/1, 1/2)" in report.to_text()


def test_unknown_command(orchestrator):
    with pytest.raises(InputError):
        orchestrator.run("integrate", build_session(example="cusp"))


def test_annihilator_table(orchestrator):
    session = build_session(example="cusp", overrides={"k": [2]})
    report = orchestrator.run("annihilator", session)
    assert report.exit_code == 0
    table = report.stage("annihilator").data["table"]["k=2"]
    assert len(table) == 2
    assert all(table.values())


def test_zero_twist_witness_is_refused(orchestrator):
    session = build_session(example="cusp", overrides={"k": [0, 1], **FAST})
    report = orchestrator.run("ext-witness", session)
    assert report.exit_code == 0
    stage = report.stage("ext-witness")
    assert stage.data["witnesses"]["k=0"] == "refused"
    assert stage.data["witnesses"]["k=1"]["2"] == {"found": 2, "samples": 2}


def test_report_json_round_trip(orchestrator):
    report = orchestrator.run("spencer", build_session(example="cusp", overrides={"k": [1]}))
    text = report.to_json()
    assert Report.from_json(text).to_json() == text


def test_runs_are_deterministic(orchestrator):
    session = build_session(example="cusp", overrides={"k": [1], **FAST})
    first = orchestrator.run("verify", session).to_json()
    second = orchestrator.run("verify", session).to_json()
    assert first == second


def test_full_pipeline_on_cusp(orchestrator):
    session = build_session(example="cusp", overrides={"k": [1, 2], **FAST})
    report = orchestrator.run("all", session)
    assert report.exit_code == 0
    assert all(s.ok for s in report.stages)
    text = report.to_text()
    assert "✓ [ext-witness] ok" in text
    assert text.endswith("exit status: 0\n")


def test_smooth_divisor_has_negative_weight(orchestrator):
    session = build_session(example="smooth", overrides={"k": [1], **FAST})
    report = orchestrator.run("verify", session)
    assert report.exit_code == 0
    assert report.stage("basis").data["deltas"][0]["nu"] == "-1/1"


@pytest.mark.slow
def test_full_pipeline_on_surfaces(orchestrator):
    for name in ("normal_crossing_3", "lwqh_surface"):
        session = build_session(example=name, overrides={"k": [1], **FAST})
        report = orchestrator.run("all", session)
        assert report.exit_code == 0, report.to_text()
    assert any("oracle skipped" in d for d in report.stage("ext-witness").diagnostics)


def test_saved_report_and_structured_log(isolated_dirs, monkeypatch):
    monkeypatch.setattr(settings, "SAVE_REPORTS", True)
    monkeypatch.setattr(settings, "STRUCTURED_LOGGING", True)
    report = PipelineOrchestrator().run("wqh", build_session(example="cusp"))

    saved = isolated_dirs / "output" / "cusp_wqh.json"
    assert Report.from_json(saved.read_text()).to_json() == report.to_json()

    logs = list((isolated_dirs / "logs").glob("cusp_wqh_*.json"))
    assert len(logs) == 1
    entry = json.loads(logs[0].read_text())
    assert entry["run_id"] == "cusp_wqh"
    assert entry["report"]["exit_code"] == 0


# ----------------------------------------------------------------------
# command line
# ----------------------------------------------------------------------

def test_main_json_output(isolated_dirs, capsys):
    code = main(["wqh", "--example", "cusp", "--format", "json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["command"] == "wqh"
    assert report["seed"] == 7


def test_main_flags_only(isolated_dirs, capsys):
    code = main(["basis", "--vars", "x,y", "--f", "x*y", "--weights", "1/2,1/2", "--k", "1,2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "✓ [basis] ok" in out
    assert "k = [1, 2]" in out


def test_main_exit_statuses(isolated_dirs, capsys):
    assert main(["wqh", "--vars", "x,y", "--f", "x^2 + y^3", "--weights", "1,1"]) == 1
    assert main(["wqh", "--example", "swallowtail"]) == 2
    assert main(["wqh", "--example", "cusp", "--f", "x +"]) == 2
    assert main(["wqh", "--example", "cusp", "--k", "one"]) == 2


def test_main_lists_examples(isolated_dirs, capsys):
    assert main(["examples"]) == 0
    out = capsys.readouterr().out
    for name in ("cusp", "normal_crossing_2", "lwqh_surface"):
        assert name in out
