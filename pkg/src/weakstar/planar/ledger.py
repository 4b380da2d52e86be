from __future__ import annotations

"""Per-round audit log of the planar construction."""

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List

from ..utils import jsonio


@dataclass
class ClaimRound:
    round_index: int
    vertex: str
    cap_before: int
    protected: List[str] = field(default_factory=list)
    edge_deletes: List[Dict[str, Any]] = field(default_factory=list)
    vertex_deletes: int = 0
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload["ok"] = self.ok
        return payload


@dataclass
class ClaimLedger:
    header: Dict[str, Any] = field(default_factory=dict)
    rounds: List[ClaimRound] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    def record(self, entry: ClaimRound) -> None:
        self.rounds.append(entry)

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.rounds)

    def max_edge_delete_cost(self) -> int:
        return max((row["cost"] for entry in self.rounds for row in entry.edge_deletes), default=0)

    def to_rows(self) -> List[Dict[str, Any]]:
        rows: List[Dict[str, Any]] = [{"kind": "header", **self.header}]
        rows.extend({"kind": "round", **entry.to_dict()} for entry in self.rounds)
        rows.append({"kind": "summary", "ok": self.ok, **self.summary})
        return rows

    def write(self, path: Path) -> None:
        jsonio.write_jsonl(path, self.to_rows())
