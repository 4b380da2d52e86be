from __future__ import annotations

import json
from pathlib import Path

from weakstar.reports import EXIT_CONSTRUCTION, EXIT_NO, EXIT_UNKNOWN, EXIT_YES, RunReport, input_digests
from weakstar.utils import seed_everything


def test_outcomes_map_to_exit_codes() -> None:
    assert RunReport("decide").finish("yes").exit_code == EXIT_YES
    assert RunReport("verify").finish("reject").exit_code == EXIT_NO
    assert RunReport("decide").finish("unknown").exit_code == EXIT_UNKNOWN
    assert RunReport("planar-cert").finish("error", EXIT_CONSTRUCTION).exit_code == 4


def test_deterministic_reports_are_byte_stable(tmp_path: Path) -> None:
    first = RunReport("decide", {"param": "weakstar"}, counters={"nodes": 3}).finish("yes")
    second = RunReport("decide", {"param": "weakstar"}, counters={"nodes": 3}).finish("yes")
    a = first.write(tmp_path / "a.json", deterministic=True)
    b = second.write(tmp_path / "b" / "b.json", deterministic=True)
    assert a.read_bytes() == b.read_bytes()
    payload = json.loads(a.read_text(encoding="utf-8"))
    assert "seconds" not in payload and "metadata" not in payload


def test_full_report_carries_metadata() -> None:
    payload = RunReport("scan").finish("yes").to_dict()
    assert payload["metadata"]["weakstar_version"]
    assert payload["seconds"] >= 0


def test_input_digests_skip_missing_files(tmp_path: Path) -> None:
    graph = tmp_path / "g.json"
    graph.write_text('{"vertices": [], "edges": []}', encoding="utf-8")
    digests = input_digests({"graph": graph, "cert": tmp_path / "absent.jsonl", "embedding": None})
    assert list(digests) == ["graph"]
    assert len(digests["graph"]) == 64


def test_seed_everything_is_repeatable() -> None:
    a = seed_everything().integers(0, 1 << 30, size=4).tolist()
    b = seed_everything().integers(0, 1 << 30, size=4).tolist()
    assert a == b
