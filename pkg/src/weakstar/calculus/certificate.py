from __future__ import annotations

"""Certificates: operation sequences, their verifier and the JSONL wire format.

A certificate file starts with a header line
``{"graph": <graph6>, "caps": {...}}`` followed by one operation per line.
When vertex ids are not ``"0".."n-1"`` the header also carries ``"vertices"``,
the ids in graph6 position order.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..config import VerifyMode, VerifyOutcome
from ..graph.core import CapMap, Graph, Vertex
from ..graph.io import parse_graph6, to_graph6
from ..utils import jsonio
from .ops import IllegalOperationError, Operation, ReplayState


class CertificateFormatError(ValueError):
    """Raised for unreadable certificate files or headers."""


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    caps: CapMap
    ops: Tuple[Operation, ...] = field(default=())

    def __post_init__(self) -> None:
        self.caps.check_domain(self.graph)

    @classmethod
    def build(cls, graph: Graph, caps: Mapping[Vertex, int], ops: Iterable[Operation]) -> "Certificate":
        return cls(graph, caps if isinstance(caps, CapMap) else CapMap(caps), tuple(ops))

    def __len__(self) -> int:
        return len(self.ops)

    def counts(self) -> Dict[str, int]:
        tally: Dict[str, int] = {"reduce": 0, "edgedel": 0, "vdel": 0, "deletesave": 0}
        for op in self.ops:
            tally[op.kind] += 1
        return tally


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    step: Optional[int] = None
    reason: Optional[str] = None
    steps_checked: int = 0
    remaining: int = 0

    @property
    def outcome(self) -> VerifyOutcome:
        return "accept" if self.accepted else "reject"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome,
            "step": self.step,
            "reason": self.reason,
            "steps_checked": self.steps_checked,
            "remaining_vertices": self.remaining,
        }


CertLike = Union[Certificate, Sequence[Operation]]


def _ops_of(cert: CertLike) -> Sequence[Operation]:
    return cert.ops if isinstance(cert, Certificate) else cert


def verify_certificate(
    graph: Graph,
    caps: Mapping[Vertex, int],
    cert: CertLike,
    mode: VerifyMode = "full",
) -> VerifyResult:
    """Replay ``cert`` from (graph, caps).

    Steps are numbered from 1. A full-mode certificate whose steps are all
    legal but that leaves vertices behind is rejected at step ``len(ops) + 1``.
    """

    if isinstance(cert, Certificate):
        if cert.graph != graph or dict(cert.caps) != dict(caps):
            return VerifyResult(False, step=0, reason="certificate header does not match the input (G, f)")
    state = ReplayState.from_graph(graph, caps)
    ops = _ops_of(cert)
    for index, op in enumerate(ops, start=1):
        try:
            state.apply(op)
        except IllegalOperationError as exc:
            return VerifyResult(False, step=index, reason=exc.reason, steps_checked=index - 1, remaining=len(state.adj))
    if mode == "full" and not state.is_empty:
        left = len(state.adj)
        return VerifyResult(
            False,
            step=len(ops) + 1,
            reason=f"final state not empty ({left} vertices remain)",
            steps_checked=len(ops),
            remaining=left,
        )
    return VerifyResult(True, steps_checked=len(ops), remaining=len(state.adj))


# wire format -------------------------------------------------------------------------------
def _positional(graph: Graph) -> bool:
    return list(graph.vertices) == [str(i) for i in range(graph.n)]


def certificate_header(graph: Graph, caps: Mapping[Vertex, int]) -> Dict[str, Any]:
    header: Dict[str, Any] = {"graph": to_graph6(graph), "caps": {v: int(caps[v]) for v in graph.vertices}}
    if not _positional(graph):
        header["vertices"] = list(graph.vertices)
    return header


def certificate_to_rows(cert: Certificate) -> List[Dict[str, Any]]:
    return [certificate_header(cert.graph, cert.caps)] + [op.to_json() for op in cert.ops]


def certificate_from_rows(rows: Sequence[Mapping[str, Any]]) -> Certificate:
    if not rows:
        raise CertificateFormatError("certificate is empty (missing header line)")
    header = rows[0]
    if "graph" not in header or "caps" not in header:
        raise CertificateFormatError('certificate header needs "graph" and "caps"')
    try:
        graph = parse_graph6(str(header["graph"])) if header["graph"] != "" else Graph.empty()
        ids = header.get("vertices")
        if ids is not None:
            if len(ids) != graph.n:
                raise CertificateFormatError("header vertex list does not match the graph6 order")
            graph = graph.relabel({str(i): str(v) for i, v in enumerate(ids)})
        caps = CapMap.from_json({"caps": header["caps"]})
        caps.check_domain(graph)
        ops = tuple(Operation.from_json(row) for row in rows[1:])
    except CertificateFormatError:
        raise
    except ValueError as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc
    return Certificate(graph, caps, ops)


def dump_certificate(path: Path, cert: Certificate) -> None:
    jsonio.write_jsonl(path, certificate_to_rows(cert))


def load_certificate(path: Path) -> Certificate:
    if not path.exists():
        raise CertificateFormatError(f"certificate file not found: {path}")
    try:
        rows = jsonio.read_jsonl(path)
    except ValueError as exc:
        raise CertificateFormatError(f"certificate {path} is not valid JSONL: {exc}") from exc
    return certificate_from_rows(rows)
