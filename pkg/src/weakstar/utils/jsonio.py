from __future__ import annotations

"""JSON and JSONL helpers for graphs, certificates, ledgers and reports."""

import hashlib
import json
from pathlib import Path
from typing import Any, Iterable, List


def read_json(path: Path) -> Any:
    with path.open("r", encoding="utf-8") as handle:
        return json.load(handle)


def dumps_sorted(payload: Any, *, indent: int | None = None) -> str:
    return json.dumps(payload, indent=indent, sort_keys=True, ensure_ascii=False)


def write_json_sorted(path: Path, payload: Any) -> None:
    """Sorted keys: reruns produce identical bytes."""

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_sorted(payload, indent=2) + "\n", encoding="utf-8")


def read_jsonl(path: Path) -> List[Any]:
    """One JSON value per non-blank line; errors name the offending line."""

    rows: List[Any] = []
    with path.open("r", encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{number}: {exc.msg}") from exc
    return rows


def write_jsonl(path: Path, rows: Iterable[Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        handle.writelines(json.dumps(row, ensure_ascii=False, separators=(",", ":")) + "\n" for row in rows)


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()
