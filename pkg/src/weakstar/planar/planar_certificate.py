from __future__ import annotations

"""Weak* k-truncated-degree certificates for 3-connected non-complete plane graphs.

With V_2 the vertices of degree >= k and V_1 the rest:

* V_2 empty: f is the degree map and the degree route applies.
* V_1 empty: every cap is k >= 6 and the planar graph is strictly degenerate.
* Otherwise V_2 vertices sharing a face are joined first (the certificate
  is transferred back to the input graph at the end). Each component Q of
  G[V_1] that is a GDP-tree is protected by a V_2 vertex u adjacent to a
  non-root vertex v' of a leaf block of its visible part Q_i. V_2 is
  processed in a 5-degenerate order; when u is the last protector of Q,
  Q - Q_i is deleted, EdgeDelete(u, v') gives v' surplus, and every round
  ends with VertexDelete(u). Components of G[V_1] that are not GDP-trees are
  left whole and deleted at the end by the degree route, after everything
  else is gone.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Set, Tuple

from ..calculus.certificate import Certificate, verify_certificate
from ..calculus.degree import ConstructionFailure, degree_certificate, degree_route
from ..calculus.ops import IllegalOperationError, Operation, ReplayState
from ..calculus.strict import strict_certificate
from ..calculus.transform import PreconditionError, transfer_certificate
from ..graph.blocks import block_decomposition, is_gdp_tree
from ..graph.connectivity import is_three_connected
from ..graph.core import CapMap, Graph, Vertex, sort_vertices
from ..graph.degeneracy import degeneracy_ordering
from ..utils import get_logger
from .embedding import PlaneEmbedding, embedding_for
from .faces import FaceSystem
from .ledger import ClaimLedger, ClaimRound
from .nice import NiceSubgraph, nice_subgraph
from .saturation import SaturationResult, saturate_visibility

log = get_logger(__name__)

DEFAULT_THRESHOLD = 16
PLANAR_DEGENERACY = 5


@dataclass
class LowComponent:
    """A component Q of G[V_1] with its faces, visible parts and protectors."""

    index: int
    vertices: FrozenSet[Vertex]
    gdp_tree: bool
    face: int = -1
    touching: Tuple[int, ...] = ()
    visible: Dict[int, FrozenSet[Vertex]] = field(default_factory=dict)
    outer_faces: Dict[int, int] = field(default_factory=dict)
    leaf_vertices: Dict[int, FrozenSet[Vertex]] = field(default_factory=dict)
    protectors: Dict[int, Tuple[Vertex, ...]] = field(default_factory=dict)
    last: Optional[Vertex] = None
    via: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "index": self.index,
            "size": len(self.vertices),
            "gdp_tree": self.gdp_tree,
            "face": self.face,
            "touching": list(self.touching),
            "protectors": {str(i): list(p) for i, p in self.protectors.items()},
            "last": self.last,
        }


@dataclass
class SplitContext:
    graph: Graph
    embedding: PlaneEmbedding
    caps: CapMap
    threshold: int
    high: FrozenSet[Vertex]
    low: FrozenSet[Vertex]
    high_components: List[FrozenSet[Vertex]]
    high_faces: FaceSystem
    nice: NiceSubgraph
    components: List[LowComponent]
    order: List[Vertex]

    def summary(self) -> Dict[str, object]:
        return {
            "threshold": self.threshold,
            "v1": len(self.low),
            "v2": len(self.high),
            "v2_components": len(self.high_components),
            "order": list(self.order),
            "components": [c.to_dict() for c in self.components],
        }


@dataclass(frozen=True)
class PlanarResult:
    certificate: Certificate
    route: str
    ledger: Optional[ClaimLedger] = None
    context: Optional[Dict[str, object]] = None
    added_edges: Tuple[Tuple[Vertex, Vertex], ...] = ()

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "route": self.route,
            "ops": len(self.certificate.ops),
            "counts": self.certificate.counts(),
            "added_edges": [list(e) for e in self.added_edges],
        }
        if self.context is not None:
            payload["context"] = self.context
        if self.ledger is not None:
            payload["max_edge_delete_cost"] = self.ledger.max_edge_delete_cost()
            payload["ledger_ok"] = self.ledger.ok
        return payload


def _visible_from(embedding: PlaneEmbedding, part: FrozenSet[Vertex]) -> Set[Vertex]:
    seen: Set[Vertex] = set()
    for face in embedding.faces:
        if face.vertices & part:
            seen |= face.vertices
    return seen


def build_split_context(saturated: SaturationResult, caps: Mapping[Vertex, int], threshold: int) -> SplitContext:
    graph, embedding, high = saturated.graph, saturated.embedding, saturated.high
    low = frozenset(graph.vertices) - high
    high_graph = graph.subgraph(high)
    high_components = [frozenset(c) for c in high_graph.components()]
    high_faces = FaceSystem(embedding, high)
    anchor = sort_vertices(high_faces.outer.vertices)[0]
    nice = nice_subgraph(embedding, anchor, high)
    systems = [FaceSystem(embedding, part) for part in high_components]
    visible = [_visible_from(embedding, part) for part in high_components]

    order = degeneracy_ordering(high_graph, PLANAR_DEGENERACY, components_consecutive=True)
    if order is None:
        raise ConstructionFailure("G[V_2] is not 5-degenerate", invariant="v2-degenerate")
    position = {u: t for t, u in enumerate(order)}

    components: List[LowComponent] = []
    for index, comp in enumerate(graph.subgraph(low).components()):
        vertices = frozenset(comp)
        info = LowComponent(index, vertices, is_gdp_tree(graph.subgraph(vertices)))
        components.append(info)
        sample = sort_vertices(vertices)[0]
        info.face = high_faces.region_of(sample)
        boundary = high_faces.face(info.face).vertices
        info.touching = tuple(i for i, part in enumerate(high_components) if part & boundary)
        if not info.gdp_tree:
            continue
        for i in info.touching:
            q_i = vertices & visible[i]
            info.visible[i] = q_i
            info.outer_faces[i] = systems[i].region_of(sample)
            tree = block_decomposition(graph.subgraph(q_i))
            leaves = tree.non_root_leaf_vertices()
            info.leaf_vertices[i] = leaves
            rim = systems[i].face(info.outer_faces[i]).vertices
            found = [
                u
                for u in sort_vertices(rim)
                if nice.has(u, info.face) and graph.neighbours(u) & leaves
            ]
            if not found:
                raise ConstructionFailure(
                    f"component {index} has no protector on the face of V_2 component {i}",
                    invariant="protector-per-face",
                    details={"component": index, "v2_component": i},
                )
            info.protectors[i] = tuple(found)
        info.last = max((u for p in info.protectors.values() for u in p), key=position.__getitem__)
        info.via = min(i for i, p in info.protectors.items() if info.last in p)

    return SplitContext(
        graph=graph,
        embedding=embedding,
        caps=CapMap(caps),
        threshold=threshold,
        high=high,
        low=low,
        high_components=high_components,
        high_faces=high_faces,
        nice=nice,
        components=components,
        order=list(order),
    )


def _far_first(graph: Graph, vertices: FrozenSet[Vertex], core: FrozenSet[Vertex]) -> List[Vertex]:
    """Vertices of ``vertices - core`` so that deleting them in order keeps the rest connected."""

    discovered: List[Vertex] = []
    seen = set(core)
    frontier = sort_vertices(core)
    while frontier:
        nxt: List[Vertex] = []
        for v in frontier:
            for w in graph.sorted_neighbours(v):
                if w in vertices and w not in seen:
                    seen.add(w)
                    discovered.append(w)
                    nxt.append(w)
        frontier = nxt
    return discovered[::-1]


def _has_surplus(state: ReplayState, vertices: Set[Vertex]) -> bool:
    return any(state.caps[v] > len(state.adj[v]) for v in vertices)


def _connected(state: ReplayState, vertices: Set[Vertex]) -> bool:
    if not vertices:
        return True
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in state.adj[v] & vertices:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def _claim_checks(ctx: SplitContext, state: ReplayState, t: int, processed: Set[Vertex]) -> Dict[str, bool]:
    position = {u: s for s, u in enumerate(ctx.order)}
    alive = set(state.adj)
    checks = {"v2-remaining": alive & ctx.high == set(ctx.order[t + 1:])}
    checks["low-caps-cover-degree"] = all(state.caps[v] >= len(state.adj[v]) for v in alive & ctx.low)
    exhausted_ok = True
    untouched_ok = True
    for info in ctx.components:
        rest = set(info.vertices) & alive
        if info.last is not None and position[info.last] <= t:
            exhausted_ok &= _connected(state, rest) and _has_surplus(state, rest)
        else:
            untouched_ok &= rest == set(info.vertices)
    checks["protected-surplus"] = exhausted_ok
    checks["unprotected-intact"] = untouched_ok
    checks["v2-caps"] = all(
        state.caps[u] == ctx.caps[u] - len(ctx.graph.neighbours(u) & processed) for u in ctx.order[t + 1:]
    )
    return checks


def run_claim_engine(ctx: SplitContext, ledger: ClaimLedger) -> List[Operation]:
    state = ReplayState.from_graph(ctx.graph, ctx.caps)
    ops: List[Operation] = []
    by_last: Dict[Vertex, List[LowComponent]] = {}
    for info in ctx.components:
        if info.last is not None:
            by_last.setdefault(info.last, []).append(info)
    processed: Set[Vertex] = set()

    def play(op: Operation) -> None:
        try:
            state.apply(op)
        except IllegalOperationError as exc:
            raise ConstructionFailure(str(exc), invariant="legal-move", details={"op": op.to_json()}) from exc
        ops.append(op)

    for t, u in enumerate(ctx.order):
        entry = ClaimRound(round_index=t + 1, vertex=u, cap_before=state.caps[u])
        for info in by_last.get(u, []):
            assert info.via is not None
            q_i = info.visible[info.via]
            for v in _far_first(ctx.graph, info.vertices, q_i):
                play(Operation.vertex_delete(v))
                entry.vertex_deletes += 1
            targets = sort_vertices(state.adj[u] & info.leaf_vertices[info.via])
            if not targets:
                raise ConstructionFailure(
                    f"protector {u} lost its leaf-block neighbour in component {info.index}",
                    invariant="protector-edge",
                )
            target = targets[0]
            cost = state.caps[target]
            play(Operation.edge_delete(u, target))
            entry.protected.append(str(info.index))
            entry.edge_deletes.append({"x": u, "y": target, "cost": cost, "component": info.index})
        play(Operation.vertex_delete(u))
        processed.add(u)
        entry.checks = _claim_checks(ctx, state, t, processed)
        ledger.record(entry)
        if not entry.ok:
            broken = next(name for name, ok in entry.checks.items() if not ok)
            raise ConstructionFailure(f"round {t + 1} ({u}) broke {broken}", invariant=broken, details=entry.to_dict())

    for comp in state.graph().components():
        part = degree_route(state, set(comp))
        ops.extend(part)
    ledger.summary.update({"ops": len(ops), "max_edge_delete_cost": ledger.max_edge_delete_cost()})
    return ops


def _check_preconditions(graph: Graph, embedding: PlaneEmbedding) -> None:
    if graph.is_complete():
        raise PreconditionError("graph is complete")
    if not is_three_connected(graph, embedding):
        raise PreconditionError("graph is not 3-connected")


def planar_certificate(
    graph: Graph,
    embedding: Optional[PlaneEmbedding] = None,
    k: int = DEFAULT_THRESHOLD,
    *,
    check_preconditions: bool = True,
) -> PlanarResult:
    """Certificate for (G, min(k, d)) on a 3-connected non-complete plane graph."""

    embedding = embedding_for(graph, embedding)
    if check_preconditions:
        _check_preconditions(graph, embedding)
    caps = CapMap.truncated(graph, k)
    high = [v for v in graph.vertices if graph.degree(v) >= k]
    if not high:
        log.info("no vertex of degree >= %d: degree route", k)
        return PlanarResult(degree_certificate(graph, caps), "degree")
    if len(high) == graph.n:
        ops = strict_certificate(graph, caps)
        if ops is None:
            raise ConstructionFailure("all caps are k but the graph is not strictly degenerate", invariant="strict")
        return PlanarResult(Certificate.build(graph, caps, ops), "strict")

    saturated = saturate_visibility(graph, embedding, k)
    sat_caps = CapMap.truncated(saturated.graph, k)
    ctx = build_split_context(saturated, sat_caps, k)
    ledger = ClaimLedger(header={"n": graph.n, "m": graph.m, "threshold": k, "added_edges": len(saturated.added)})
    ops = run_claim_engine(ctx, ledger)
    result = verify_certificate(saturated.graph, sat_caps, ops)
    if not result.accepted:
        raise ConstructionFailure(f"certificate rejected at step {result.step}: {result.reason}", invariant="verify")
    if saturated.added:
        cert = transfer_certificate(saturated.graph, sat_caps, ops, graph, caps)
    else:
        cert = Certificate.build(graph, caps, ops)
    log.info("planar certificate: %d ops, %d rounds, hub cost <= %d", len(cert.ops), len(ledger.rounds), ledger.max_edge_delete_cost())
    return PlanarResult(cert, "claim", ledger, ctx.summary(), saturated.added)
