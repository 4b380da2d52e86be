from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

from typer import Exit
import pytest

from weakstar.calculus import load_certificate
from weakstar.cli import build_h, catalogue, decide, general_cert, planar_cert, scan, sharpness, verify, verify_h

GRAPHS_DIR = Path(__file__).resolve().parents[1] / "data" / "graphs"


def _exit_code(command: Callable[..., None], **kwargs: object) -> int:
    with pytest.raises(Exit) as excinfo:
        command(**kwargs)
    return excinfo.value.exit_code


def _stdout_report(capsys: pytest.CaptureFixture[str]) -> dict:
    return json.loads(capsys.readouterr().out)


def test_decide_yes_writes_a_certificate_that_verifies(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    graph = GRAPHS_DIR / "k3.json"
    cert_path = tmp_path / "k3.jsonl"
    assert _exit_code(decide, graph_path=graph, caps_spec="const:3", out=cert_path, deterministic=True) == 0
    payload = _stdout_report(capsys)
    assert payload["outcome"] == "yes"
    assert payload["certificate"] == str(cert_path)
    assert "metadata" not in payload
    assert load_certificate(cert_path).ops

    assert _exit_code(verify, graph_path=graph, caps_spec="const:3", cert_path=cert_path) == 0
    assert _stdout_report(capsys)["outcome"] == "accept"
    assert _exit_code(verify, graph_path=graph, caps_spec="const:2", cert_path=cert_path) == 1
    assert _stdout_report(capsys)["details"]["step"] == 0


def test_decide_no_and_other_parameters(capsys: pytest.CaptureFixture[str]) -> None:
    graph = GRAPHS_DIR / "k3.json"
    assert _exit_code(decide, graph_path=graph, caps_spec="const:2") == 1
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "c4.g6", caps_spec="const:2", param="choosable") == 0
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "c4.json", caps_spec="const:2", param="dp") == 1
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "k24.json", caps_spec="const:2", param="choosable") == 1
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "c4.json", caps_spec=f"file:{GRAPHS_DIR / 'c4_caps.json'}", param="at") == 0
    capsys.readouterr()


def test_decide_reports_budget_exhaustion_as_unknown(
    tmp_path: Path, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.delenv("WEAKSTAR_BUDGET", raising=False)
    config = tmp_path / "tiny.yaml"
    config.write_text("node_budget: 1\n", encoding="utf-8")
    code = _exit_code(decide, graph_path=GRAPHS_DIR / "k4.json", caps_spec="const:3", config=config)
    assert code == 2
    payload = _stdout_report(capsys)
    assert payload["outcome"] == "unknown"
    assert payload["counters"]["node_budget"] == 1


def test_bad_input_exits_with_input_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert _exit_code(decide, graph_path=tmp_path / "missing.json", caps_spec="deg") == 3
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "k3.json", caps_spec="bogus") == 3
    assert _exit_code(decide, graph_path=GRAPHS_DIR / "k3.json", caps_spec="deg", param="chi") == 3
    broken = tmp_path / "broken.jsonl"
    broken.write_text("not json\n", encoding="utf-8")
    assert _exit_code(verify, graph_path=GRAPHS_DIR / "k3.json", caps_spec="deg", cert_path=broken) == 3
    capsys.readouterr()


def test_planar_cert_exit_codes(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    octahedron = GRAPHS_DIR / "octahedron.json"
    out = tmp_path / "octahedron.jsonl"
    report_path = tmp_path / "report.json"
    code = _exit_code(planar_cert, graph_path=octahedron, out=out, report_path=report_path, deterministic=True)
    assert code == 0
    assert out.exists()
    written = json.loads(report_path.read_text(encoding="utf-8"))
    assert written["details"]["route"] == "degree"
    assert written["counters"]["certificate_ops"] > 0

    assert _exit_code(planar_cert, graph_path=GRAPHS_DIR / "k4.json") == 3
    assert _exit_code(planar_cert, graph_path=octahedron, k=3) == 4
    assert _exit_code(general_cert, graph_path=GRAPHS_DIR / "c5.json") == 3
    assert _exit_code(general_cert, graph_path=octahedron) == 0
    capsys.readouterr()


def test_scan_command(capsys: pytest.CaptureFixture[str]) -> None:
    assert _exit_code(scan, suite="degree", max_n=3) == 0
    payload = _stdout_report(capsys)
    assert payload["counters"]["violations"] == 0
    assert _exit_code(scan, suite="implications", max_n=99) == 3
    assert _exit_code(scan, suite="theory", max_n=3) == 3
    capsys.readouterr()


def test_scan_accepts_suite_aliases(capsys: pytest.CaptureFixture[str]) -> None:
    assert _exit_code(scan, suite="theorem32", max_n=3) == 0
    payload = _stdout_report(capsys)
    assert payload["counters"]["violations"] == 0
    assert payload["details"]["suite"] == "theorem32"


def test_catalogue_prints_graph6(capsys: pytest.CaptureFixture[str]) -> None:
    catalogue(n=3)
    lines = capsys.readouterr().out.split()
    assert len(lines) == 2


def test_verify_h_reports_the_gadget(capsys: pytest.CaptureFixture[str]) -> None:
    assert _exit_code(verify_h) == 0
    payload = _stdout_report(capsys)
    assert payload["outcome"] == "yes"
    assert payload["details"]["vertices"] == 28


def test_sharpness_instance_is_not_colourable(capsys: pytest.CaptureFixture[str]) -> None:
    assert _exit_code(sharpness, s=3, k=2) == 0
    payload = _stdout_report(capsys)
    assert payload["details"]["f_assignment"] is True
    assert payload["details"]["colourable"] is False


def test_build_h_writes_the_gadget(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "h.json"
    assert _exit_code(build_h, out=out, deterministic=True) == 0
    report = _stdout_report(capsys)
    assert report["counters"]["vertices"] == 28
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["terminals"]
