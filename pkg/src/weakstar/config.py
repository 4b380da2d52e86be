from __future__ import annotations

"""Configuration, settings models, and project paths."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

Outcome = Literal["yes", "no", "unknown"]
VerifyOutcome = Literal["accept", "reject"]
DecisionParam = Literal[
    "weakstar",
    "strictweak",
    "strict",
    "choosable",
    "dp",
    "paint",
    "dppaint",
    "at",
]
ScanSuite = Literal["hierarchy", "degree", "implications", "splits", "theorem11", "theorem32"]
ParameterName = Literal["ch", "chi_DP", "chi_P", "chi_DPP"]
VerifyMode = Literal["full", "prefix"]

BUDGET_ENV_VAR = "WEAKSTAR_BUDGET"
DEFAULT_NODE_BUDGET = 10_000_000


class SettingsNotFoundError(FileNotFoundError):
    """Raised when a settings file cannot be located."""


class OracleLimits(BaseModel):
    """Instance-size guards; exceeding one yields an "unknown" outcome."""

    model_config = ConfigDict(extra="forbid")

    choosable_max_n: int = Field(default=8, ge=0)
    dp_colourable_max_n: int = Field(default=6, ge=0)
    paintable_max_n: int = Field(default=5, ge=0)
    dp_paintable_max_n: int = Field(default=4, ge=0)
    at_max_edges: int = Field(default=18, ge=0)
    coefficient_max_edges: int = Field(default=16, ge=0)
    eulerian_max_edges: int = Field(default=20, ge=0)
    sharpness_max_vertices: int = Field(default=20_000, ge=1)

    @model_validator(mode="after")
    def _validate_nesting(self) -> "OracleLimits":
        if self.dp_paintable_max_n > self.paintable_max_n + 1:
            raise ValueError("dp_paintable_max_n must not exceed paintable_max_n + 1")
        if self.at_max_edges > self.eulerian_max_edges:
            raise ValueError("at_max_edges requires eulerian_max_edges >= at_max_edges")
        return self


class SolverSettings(BaseModel):
    """Knobs shared by every exact procedure."""

    model_config = ConfigDict(extra="forbid")

    node_budget: int = Field(default=DEFAULT_NODE_BUDGET, ge=1)
    canonical_memo: bool = True
    dominance_pruning: bool = True
    use_certificates: bool = True
    deterministic: bool = True
    workers: int = Field(default=1, ge=1)
    limits: OracleLimits = Field(default_factory=OracleLimits)

    @model_validator(mode="after")
    def _validate_workers(self) -> "SolverSettings":
        if self.deterministic and self.workers != 1:
            raise ValueError("deterministic runs require workers == 1")
        return self

    def with_budget(self, node_budget: int) -> "SolverSettings":
        return self.model_copy(update={"node_budget": node_budget})


DEFAULT_SETTINGS = SolverSettings()


@dataclass(frozen=True)
class ProjectPaths:
    project_root: Path
    data_dir: Path
    gadgets_dir: Path
    graphs_dir: Path
    settings_dir: Path


def _default_paths() -> ProjectPaths:
    root = Path(__file__).resolve().parents[2]
    data_dir = root / "data"
    return ProjectPaths(
        project_root=root,
        data_dir=data_dir,
        gadgets_dir=data_dir / "gadgets",
        graphs_dir=data_dir / "graphs",
        settings_dir=data_dir / "settings",
    )


PATHS = _default_paths()


def budget_from_env(default: int) -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


def settings_from_mapping(payload: Dict[str, Any]) -> SolverSettings:
    try:
        return SolverSettings.model_validate(payload)
    except ValidationError as exc:
        raise ValueError(f"Invalid solver settings: {exc}") from exc


def load_settings(path: Optional[Path] = None, *, apply_env: bool = True) -> SolverSettings:
    """Load settings from YAML (default file when present), then apply the env override."""

    payload: Dict[str, Any] = {}
    if path is not None:
        if not path.exists():
            raise SettingsNotFoundError(f"Settings file not found: {path}")
        payload = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    else:
        default = PATHS.settings_dir / "default.yaml"
        if default.exists():
            payload = yaml.safe_load(default.read_text(encoding="utf-8")) or {}
    if not isinstance(payload, dict):
        raise ValueError("Settings file must contain a mapping")
    settings = settings_from_mapping(payload)
    if apply_env:
        settings = settings.with_budget(budget_from_env(settings.node_budget))
    return settings
