from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from weakstar.config import (
    BUDGET_ENV_VAR,
    DEFAULT_NODE_BUDGET,
    DEFAULT_SETTINGS,
    OracleLimits,
    PATHS,
    SettingsNotFoundError,
    SolverSettings,
    load_settings,
)


def test_default_settings_file_loads(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
    settings = load_settings()
    assert settings.deterministic
    assert settings.workers == 1
    assert settings.node_budget == DEFAULT_NODE_BUDGET
    assert settings.limits.choosable_max_n == 8


def test_quick_settings_shrink_limits(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
    settings = load_settings(PATHS.settings_dir / "quick.yaml")
    assert settings.node_budget == 200_000
    assert settings.limits.paintable_max_n == 4
    assert settings.limits.at_max_edges == OracleLimits().at_max_edges


def test_budget_env_override(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(BUDGET_ENV_VAR, "1234")
    assert load_settings().node_budget == 1234
    assert load_settings(apply_env=False).node_budget == DEFAULT_NODE_BUDGET
    monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
    with pytest.raises(ValueError):
        load_settings()
    monkeypatch.setenv(BUDGET_ENV_VAR, "0")
    with pytest.raises(ValueError):
        load_settings()


def test_settings_file_errors(tmp_path: Path) -> None:
    with pytest.raises(SettingsNotFoundError):
        load_settings(tmp_path / "absent.yaml")
    listed = tmp_path / "list.yaml"
    listed.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_settings(listed)
    unknown = tmp_path / "unknown.yaml"
    unknown.write_text("node_budget: 10\nturbo: true\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Invalid solver settings"):
        load_settings(unknown)


def test_settings_validators() -> None:
    with pytest.raises(ValidationError):
        SolverSettings(workers=4)
    assert SolverSettings(workers=4, deterministic=False).workers == 4
    with pytest.raises(ValidationError):
        OracleLimits(paintable_max_n=3, dp_paintable_max_n=5)
    with pytest.raises(ValidationError):
        OracleLimits(at_max_edges=30)
    with pytest.raises(ValidationError):
        SolverSettings(node_budget=0)
    assert SolverSettings().with_budget(5).node_budget == 5


def test_module_defaults_match_a_fresh_settings_model() -> None:
    assert DEFAULT_SETTINGS == SolverSettings()
    assert DEFAULT_SETTINGS.node_budget == DEFAULT_NODE_BUDGET
    assert DEFAULT_SETTINGS.limits.eulerian_max_edges >= DEFAULT_SETTINGS.limits.at_max_edges
