from __future__ import annotations

"""AT orientation extracted from a weak* certificate.

The certificate is replayed forward to record caps, then unwound from the end:

* EdgeDelete(x, y) adds the arc x -> y with weight f(y) at that step; y's
  weighted out-degree is below f(y), so the arc lies in no Eulerian subgraph.
* VertexDelete(x) adds an arc y -> x of weight 1 from every neighbour y, making
  x a sink.
* ReduceValue changes nothing.

Weights set by earlier unwinding steps are kept, so the weighted out-degree
t_D satisfies t_D + 1 <= f and diff(D, w) = 1.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..calculus.certificate import verify_certificate
from ..calculus.ops import Operation, ReplayState
from ..calculus.transform import PreconditionError, expand_delete_save
from ..graph.core import Edge, Graph, Vertex, edge_key
from .eulerian import eulerian_diff
from .orientation import Arc, EdgeWeighting, Orientation


@dataclass(frozen=True)
class ExtractedOrientation:
    orientation: Orientation
    weights: EdgeWeighting

    def weighted_out_degree(self) -> Dict[Vertex, int]:
        return self.orientation.weighted_out_degree(self.weights)

    def check(self, caps: Mapping[Vertex, int], *, max_edges: Optional[int] = 20) -> Tuple[bool, Optional[int]]:
        """(t_D + 1 <= f, diff(D, w)); diff is None above ``max_edges``."""

        bounded = all(t + 1 <= caps[v] for v, t in self.weighted_out_degree().items())
        if max_edges is not None and self.orientation.base.m > max_edges:
            return bounded, None
        return bounded, eulerian_diff(self.orientation, self.weights, max_edges=max_edges)


def certificate_to_at_orientation(
    graph: Graph,
    caps: Mapping[Vertex, int],
    ops: Sequence[Operation],
) -> ExtractedOrientation:
    result = verify_certificate(graph, caps, ops)
    if not result.accepted:
        raise PreconditionError(f"certificate does not verify (step {result.step}: {result.reason})")
    expanded = expand_delete_save(ops)
    state = ReplayState.from_graph(graph, caps)
    snapshots: List[Tuple[Operation, Optional[int], List[Vertex]]] = []
    for op in expanded:
        reference = state.caps[op.y] if op.kind == "edgedel" and op.y is not None else None
        neighbours = sorted(state.adj[op.x]) if op.kind == "vdel" else []
        snapshots.append((op, reference, neighbours))
        state.apply(op)

    arcs: List[Arc] = []
    weights: Dict[Edge, int] = {}
    for op, reference, neighbours in reversed(snapshots):
        if op.kind == "edgedel":
            assert op.y is not None and reference is not None
            arcs.append((op.x, op.y))
            weights[edge_key(op.x, op.y)] = reference
        elif op.kind == "vdel":
            for other in neighbours:
                arcs.append((other, op.x))
                weights[edge_key(other, op.x)] = 1
    extracted = ExtractedOrientation(Orientation.from_arcs(graph, arcs), EdgeWeighting(weights))
    bounded, diff = extracted.check(caps)
    if not bounded:
        raise AssertionError("extracted orientation has weighted out-degree t_D + 1 > f")
    if diff == 0:
        raise AssertionError("extracted orientation has diff(D, w) = 0")
    return extracted
