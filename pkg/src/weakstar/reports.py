from __future__ import annotations

"""Run reports: what was asked, on which inputs, what came out and how long it took."""

import platform
import subprocess
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from . import __version__
from .config import PATHS, ProjectPaths
from .utils import jsonio

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3
EXIT_CONSTRUCTION = 4

OUTCOME_EXIT = {"yes": EXIT_YES, "accept": EXIT_YES, "no": EXIT_NO, "reject": EXIT_NO, "unknown": EXIT_UNKNOWN}


def _git_metadata(project_root: Path) -> Dict[str, object]:
    try:
        commit = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            cwd=project_root,
            check=False,
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            text=True,
        ).stdout.strip()
    except OSError:
        commit = ""
    return {"git_commit": commit or None}


def build_metadata(paths: ProjectPaths = PATHS) -> Dict[str, Any]:
    metadata: Dict[str, Any] = {
        "weakstar_version": __version__,
        "python_version": sys.version.split()[0],
        "platform": platform.platform(),
    }
    metadata.update(_git_metadata(paths.project_root))
    return metadata


def input_digests(paths: Dict[str, Optional[Path]]) -> Dict[str, str]:
    return {name: jsonio.file_sha256(path) for name, path in paths.items() if path is not None and path.exists()}


@dataclass
class RunReport:
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    inputs: Dict[str, str] = field(default_factory=dict)
    outcome: str = "unknown"
    exit_code: int = EXIT_UNKNOWN
    certificate_path: Optional[str] = None
    seconds: float = 0.0
    counters: Dict[str, Any] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def finish(self, outcome: str, exit_code: Optional[int] = None) -> "RunReport":
        self.outcome = outcome
        self.exit_code = OUTCOME_EXIT.get(outcome, EXIT_UNKNOWN) if exit_code is None else exit_code
        self.seconds = round(time.perf_counter() - self._started, 6)
        return self

    def to_dict(self, *, with_metadata: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "command": self.command,
            "arguments": self.arguments,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "exit_code": self.exit_code,
            "certificate": self.certificate_path,
            "seconds": self.seconds,
            "counters": self.counters,
            "details": self.details,
        }
        if with_metadata:
            payload["metadata"] = build_metadata()
        return payload

    def to_json(self, *, deterministic: bool = False) -> str:
        payload = self.to_dict(with_metadata=not deterministic)
        if deterministic:
            payload.pop("seconds")
        return jsonio.dumps_sorted(payload, indent=2)

    def write(self, path: Path, *, deterministic: bool = False) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(deterministic=deterministic) + "\n", encoding="utf-8")
        return path
