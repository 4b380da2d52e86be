from __future__ import annotations

"""Constructive splitting of a weak* certificate along g <= f.

Given a certificate for (G, f) and g <= f, produce X with certificates for
(G[X], g) and (G - X, f - g). A forward pass tracks g through the certificate:

* ReduceValue(x): g' = min(g, f').
* EdgeDelete(x, y): g'(x) = min(f'(x), max(0, g(x) - g(y))).
* VertexDelete(x): if g(x) >= 1, x joins X and every neighbour u with
  g(u) >= 1 loses one; otherwise g' = min(g, f').

A second pass replays the certificate on both halves, keeping each half's
caps at or above the tracked values and reducing a reference vertex just
before it is used.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Sequence, Set

from ..graph.core import CapMap, Graph, Vertex, sort_vertices
from ..utils import get_logger
from .certificate import Certificate, verify_certificate
from .ops import Operation, ReplayState
from .transform import CertificateTransferError, PreconditionError, expand_delete_save

log = get_logger(__name__)


@dataclass(frozen=True)
class SplitResult:
    x_set: FrozenSet[Vertex]
    cert_x: Certificate
    cert_rest: Certificate

    def to_dict(self) -> Dict[str, object]:
        return {
            "X": sort_vertices(self.x_set),
            "cert_x_ops": len(self.cert_x.ops),
            "cert_rest_ops": len(self.cert_rest.ops),
        }


def _track(graph: Graph, caps: Mapping[Vertex, int], g: Mapping[Vertex, int], ops: Sequence[Operation]) -> Set[Vertex]:
    state = ReplayState.from_graph(graph, caps)
    track: Dict[Vertex, int] = {v: int(g[v]) for v in graph.vertices}
    x_set: Set[Vertex] = set()
    for op in ops:
        if op.kind == "reduce":
            state.apply(op)
            track[op.x] = min(track[op.x], state.caps[op.x])
        elif op.kind == "edgedel":
            assert op.y is not None
            gx, gy = track[op.x], track[op.y]
            state.apply(op)
            track[op.x] = min(state.caps[op.x], max(0, gx - gy))
        else:
            neighbours = set(state.adj[op.x])
            gx = track.pop(op.x)
            state.apply(op)
            if gx >= 1:
                x_set.add(op.x)
                for u in neighbours:
                    if track[u] >= 1:
                        track[u] -= 1
            else:
                for u in neighbours:
                    track[u] = min(track[u], state.caps[u])
    return x_set


def _emit_edge_delete(half: ReplayState, out: List[Operation], x: Vertex, y: Vertex, level: int) -> None:
    current = half.caps[y]
    if current > level >= 1:
        move = Operation.reduce(y, current - level)
        half.apply(move)
        out.append(move)
    op = Operation.edge_delete(x, y)
    half.apply(op)
    out.append(op)


def certificate_split(
    graph: Graph,
    caps: Mapping[Vertex, int],
    g: Mapping[Vertex, int],
    ops: Sequence[Operation],
) -> SplitResult:
    f_map = CapMap.for_graph(graph, caps)
    g_map = CapMap.for_graph(graph, g)
    if not g_map.le(f_map):
        raise PreconditionError("certificate_split needs g <= f pointwise")
    checked = verify_certificate(graph, f_map, ops)
    if not checked.accepted:
        raise PreconditionError(f"input certificate does not verify (step {checked.step}: {checked.reason})")
    everything = frozenset(graph.vertices)
    if g_map == f_map:
        return SplitResult(everything, Certificate.build(graph, f_map, ops), Certificate.build(Graph.empty(), {}, ()))
    if all(value == 0 for value in g_map.values()):
        return SplitResult(frozenset(), Certificate.build(Graph.empty(), {}, ()), Certificate.build(graph, f_map, ops))

    expanded = expand_delete_save(ops)
    x_set = _track(graph, f_map, g_map, expanded)
    rest_set = everything - x_set
    x_graph = graph.subgraph(x_set)
    rest_graph = graph.subgraph(rest_set)
    x_caps = {v: g_map[v] for v in x_set}
    rest_caps = {v: f_map[v] - g_map[v] for v in rest_set}

    state = ReplayState.from_graph(graph, f_map)
    track: Dict[Vertex, int] = {v: g_map[v] for v in graph.vertices}
    half_x = ReplayState.from_graph(x_graph, x_caps)
    half_rest = ReplayState.from_graph(rest_graph, rest_caps)
    ops_x: List[Operation] = []
    ops_rest: List[Operation] = []
    for op in expanded:
        if op.kind == "reduce":
            state.apply(op)
            track[op.x] = min(track[op.x], state.caps[op.x])
            continue
        if op.kind == "edgedel":
            assert op.y is not None
            fy = state.caps[op.y]
            gx, gy = track[op.x], track[op.y]
            state.apply(op)
            track[op.x] = min(state.caps[op.x], max(0, gx - gy))
            if op.x in x_set and op.y in x_set:
                _emit_edge_delete(half_x, ops_x, op.x, op.y, gy)
            elif op.x in rest_set and op.y in rest_set:
                _emit_edge_delete(half_rest, ops_rest, op.x, op.y, fy - gy)
            continue
        neighbours = set(state.adj[op.x])
        gx = track.pop(op.x)
        state.apply(op)
        if gx >= 1:
            half_x.apply(op)
            ops_x.append(op)
            for u in neighbours:
                if track[u] >= 1:
                    track[u] -= 1
        else:
            half_rest.apply(op)
            ops_rest.append(op)
            for u in neighbours:
                track[u] = min(track[u], state.caps[u])

    cert_x = Certificate.build(x_graph, x_caps, ops_x)
    cert_rest = Certificate.build(rest_graph, rest_caps, ops_rest)
    for label, cert in (("G[X]", cert_x), ("G - X", cert_rest)):
        result = verify_certificate(cert.graph, cert.caps, cert)
        if not result.accepted:
            raise CertificateTransferError(f"split certificate for {label} rejected at step {result.step}: {result.reason}")
    log.debug("split: |X|=%d, ops %d + %d", len(x_set), len(ops_x), len(ops_rest))
    return SplitResult(frozenset(x_set), cert_x, cert_rest)
