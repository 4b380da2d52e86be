from __future__ import annotations

"""Certificate rewriting: DeleteSave expansion, lifting, transfer, normal form.

Every rewrite runs a shadow replay of the source certificate next to the
target state and keeps the target caps pointwise at or above the source caps,
emitting ReduceValue moves right before an EdgeDelete whose reference vertex
would otherwise be too expensive.
"""

from typing import List, Mapping, Optional, Sequence

from ..graph.core import CapMap, Graph, Vertex
from .certificate import Certificate, verify_certificate
from .ops import Operation, ReplayState


class PreconditionError(ValueError):
    """Raised when an input certificate or cap map violates a stated precondition."""


class CertificateTransferError(RuntimeError):
    """Raised when a rewritten certificate fails verification."""


def expand_delete_save(ops: Sequence[Operation]) -> List[Operation]:
    """DeleteSave(x, y) becomes EdgeDelete(x, y), VertexDelete(x)."""

    out: List[Operation] = []
    for op in ops:
        if op.kind == "deletesave":
            assert op.y is not None
            out.append(Operation.edge_delete(op.x, op.y))
            out.append(Operation.vertex_delete(op.x))
        else:
            out.append(op)
    return out


def _require_verified(graph: Graph, caps: Mapping[Vertex, int], ops: Sequence[Operation]) -> None:
    result = verify_certificate(graph, caps, ops)
    if not result.accepted:
        raise PreconditionError(f"input certificate does not verify (step {result.step}: {result.reason})")


def _shadow_rewrite(
    source: ReplayState,
    target: ReplayState,
    ops: Sequence[Operation],
    *,
    keep_reduces: bool,
) -> List[Operation]:
    """Replay ``ops`` on ``source`` while emitting dominating moves on ``target``.

    ``target`` must hold a subset of the source edges on the same vertex set
    and caps at least the source caps; EdgeDeletes on edges missing from the
    target are skipped.
    """

    out: List[Operation] = []
    for op in ops:
        if op.kind == "reduce":
            source.apply(op)
            if keep_reduces:
                level = source.caps[op.x]
                current = target.caps[op.x]
                if current > level:
                    move = Operation.reduce(op.x, current - level)
                    target.apply(move)
                    out.append(move)
            continue
        if op.kind == "edgedel":
            assert op.y is not None
            reference = source.caps[op.y]
            source.apply(op)
            if not target.has_edge(op.x, op.y):
                continue
            current = target.caps[op.y]
            if current > reference >= 1:
                move = Operation.reduce(op.y, current - reference)
                target.apply(move)
                out.append(move)
            target.apply(op)
            out.append(op)
            continue
        if op.kind == "vdel":
            source.apply(op)
            target.apply(op)
            out.append(op)
            continue
        raise PreconditionError("expand DeleteSave moves before rewriting")
    return out


def lift_certificate(
    graph: Graph,
    low: Mapping[Vertex, int],
    high: Mapping[Vertex, int],
    ops: Sequence[Operation],
) -> List[Operation]:
    """Certificate for (graph, high) from one for (graph, low) with low <= high.

    A prefix of ReduceValue moves brings every cap down to ``low``.
    """

    prefix: List[Operation] = []
    for vertex in graph.vertices:
        if high[vertex] < low[vertex]:
            raise PreconditionError(f"lift needs low <= high (vertex {vertex})")
        if high[vertex] > low[vertex]:
            if low[vertex] < 1:
                raise PreconditionError(f"cannot lift onto a zero cap at {vertex}")
            prefix.append(Operation.reduce(vertex, high[vertex] - low[vertex]))
    return prefix + list(ops)


def transfer_certificate(
    supergraph: Graph,
    caps: Mapping[Vertex, int],
    ops: Sequence[Operation],
    subgraph: Graph,
    sub_caps: Optional[Mapping[Vertex, int]] = None,
) -> Certificate:
    """Replay a certificate of a spanning supergraph on ``subgraph``.

    ``sub_caps`` defaults to ``caps`` and must dominate it pointwise. The
    output is verified; CertificateTransferError means the rewrite could not
    keep every step legal.
    """

    if set(subgraph.vertices) != set(supergraph.vertices):
        raise PreconditionError("transfer needs a spanning subgraph")
    missing = [e for e in subgraph.edges if not supergraph.has_edge(*e)]
    if missing:
        raise PreconditionError(f"edge {missing[0]} is not in the supergraph")
    target_caps = dict(caps) if sub_caps is None else {v: int(sub_caps[v]) for v in subgraph.vertices}
    expanded = expand_delete_save(ops)
    _require_verified(supergraph, caps, expanded)
    source = ReplayState.from_graph(supergraph, caps)
    target = ReplayState.from_graph(subgraph, target_caps)
    prefix: List[Operation] = []
    for vertex in subgraph.vertices:
        if target_caps[vertex] < caps[vertex]:
            raise PreconditionError(f"subgraph cap at {vertex} is below the source cap")
        if target_caps[vertex] > caps[vertex] >= 1:
            move = Operation.reduce(vertex, target_caps[vertex] - caps[vertex])
            target.apply(move)
            prefix.append(move)
    body = _shadow_rewrite(source, target, expanded, keep_reduces=False)
    cert = Certificate.build(subgraph, CapMap(target_caps), prefix + body)
    result = verify_certificate(subgraph, target_caps, cert.ops)
    if not result.accepted:
        raise CertificateTransferError(f"transferred certificate rejected at step {result.step}: {result.reason}")
    return cert


def is_normal(ops: Sequence[Operation]) -> bool:
    """Every ReduceValue is followed, after other ReduceValues only, by an
    EdgeDelete whose reference is the reduced vertex."""

    for index, op in enumerate(ops):
        if op.kind != "reduce":
            continue
        follow = index + 1
        while follow < len(ops) and ops[follow].kind == "reduce":
            follow += 1
        if follow == len(ops):
            return False
        nxt = ops[follow]
        if nxt.kind != "edgedel" or nxt.y != op.x:
            return False
    return True


def normalize_certificate(graph: Graph, caps: Mapping[Vertex, int], ops: Sequence[Operation]) -> List[Operation]:
    """Drop cosmetic ReduceValues; reductions reappear only where an EdgeDelete needs them."""

    _require_verified(graph, caps, ops)
    if is_normal(ops):
        return list(ops)
    expanded = expand_delete_save(ops)
    source = ReplayState.from_graph(graph, caps)
    target = ReplayState.from_graph(graph, caps)
    out = _shadow_rewrite(source, target, expanded, keep_reduces=False)
    result = verify_certificate(graph, caps, out)
    if not result.accepted:
        raise CertificateTransferError(f"normalised certificate rejected at step {result.step}: {result.reason}")
    return out
