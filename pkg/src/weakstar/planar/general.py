from __future__ import annotations

"""Truncated-degree certificates for graphs excluding a K_{s,t} minor.

The caller names (s, t); no minor testing happens. Every bound the
construction leans on is an edge-count consequence of excluding K_{s,t},
so a violated bound is reported as a ConstructionFailure pointing at a
K_{s,t} minor rather than proving one.
"""

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..calculus.certificate import Certificate, verify_certificate
from ..calculus.degree import ConstructionFailure, degree_certificate, degree_route
from ..calculus.ops import IllegalOperationError, Operation, ReplayState
from ..calculus.transform import PreconditionError
from ..graph.blocks import block_decomposition, is_gdp_tree
from ..graph.connectivity import vertex_connectivity_at_least
from ..graph.core import CapMap, Graph, Vertex, sort_vertices, vertex_key
from ..graph.degeneracy import degeneracy_ordering
from ..utils import get_logger
from .ledger import ClaimLedger, ClaimRound
from .planar_certificate import PlanarResult

log = get_logger(__name__)


class MinorParams(BaseModel):
    """Excluded minor K_{s,t} and the constants derived from it."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    s: int = Field(ge=1)
    t: int = Field(ge=1)

    @property
    def peel_bound(self) -> int:
        return 4 ** (self.s + 1) * math.factorial(self.s) * self.s * self.t

    @property
    def block_bound(self) -> int:
        return self.s + self.t - 1

    @property
    def q(self) -> int:
        return self.peel_bound * self.block_bound + 1

    @property
    def k(self) -> int:
        return 2 ** (self.s + 2) * self.t * self.q

    @property
    def degeneracy_cap(self) -> int:
        return 2 ** (self.s + 2) * self.t - 1

    def to_dict(self) -> Dict[str, int]:
        return {
            "s": self.s,
            "t": self.t,
            "q": self.q,
            "k": self.k,
            "peel_bound": self.peel_bound,
            "degeneracy_cap": self.degeneracy_cap,
            "block_bound": self.block_bound,
        }


@dataclass(frozen=True)
class PeelStep:
    vertex: Vertex
    private: Tuple[int, ...]


def _normalise_high(
    graph: Graph, state: ReplayState, high: FrozenSet[Vertex], params: MinorParams
) -> List[Operation]:
    """Make V_2 independent with every cap equal to q."""

    order = degeneracy_ordering(graph.subgraph(high), params.degeneracy_cap)
    if order is None:
        raise ConstructionFailure(
            f"G[V_2] is not {params.degeneracy_cap}-degenerate",
            invariant="v2-degenerate",
            details={"cap": params.degeneracy_cap},
        )
    ops: List[Operation] = []
    done: Set[Vertex] = set()
    for w in order:
        for earlier in sort_vertices(state.adj[w] & done):
            ops.append(Operation.edge_delete(w, earlier))
            state.apply(ops[-1])
        excess = state.caps[w] - params.q
        if excess < 0:
            raise ConstructionFailure(f"{w} dropped below q", invariant="normalise", details={"vertex": w})
        if excess:
            ops.append(Operation.reduce(w, excess))
            state.apply(ops[-1])
        done.add(w)
    return ops


def _peel_high(
    components: List[FrozenSet[Vertex]], high: FrozenSet[Vertex], state: ReplayState, params: MinorParams
) -> List[PeelStep]:
    """Order V_2 by repeatedly removing a low-degree vertex of the contracted bipartite graph.

    The returned list is in processing order: the last vertex peeled comes first.
    """

    touching: Dict[Vertex, Set[int]] = {w: set() for w in high}
    for index, comp in enumerate(components):
        for v in comp:
            for w in state.adj[v] & high:
                touching[w].add(index)
    alive_a = set(range(len(components)))
    alive_b = set(high)
    steps: List[PeelStep] = []
    while alive_b:
        u = min(alive_b, key=lambda w: (len(touching[w] & alive_a), vertex_key(w)))
        private = touching[u] & alive_a
        if len(private) > params.peel_bound:
            raise ConstructionFailure(
                f"every remaining V_2 vertex touches more than {params.peel_bound} components",
                invariant="peel-bound",
                details={"vertex": u, "degree": len(private)},
            )
        steps.append(PeelStep(u, tuple(sorted(private))))
        alive_a -= private
        alive_b.discard(u)
    return steps[::-1]


def _shrink_to_contact(state: ReplayState, vertices: Set[Vertex], hub: Vertex, ops: List[Operation]) -> Set[Vertex]:
    """Delete non-cut vertices not adjacent to ``hub`` until none is left."""

    rest = set(vertices)
    while len(rest) > 1:
        sub = Graph({v: state.adj[v] & rest for v in rest})
        cuts = block_decomposition(sub).cut_vertices
        spare = [v for v in sort_vertices(rest) if v not in cuts and hub not in state.adj[v]]
        if not spare:
            break
        ops.append(Operation.vertex_delete(spare[0]))
        state.apply(ops[-1])
        rest.discard(spare[0])
    return rest


def _contact_vertex(state: ReplayState, rest: Set[Vertex], hub: Vertex) -> Vertex:
    sub = Graph({v: state.adj[v] & rest for v in rest})
    candidates = [v for v in block_decomposition(sub).non_root_leaf_vertices() if hub in state.adj[v]]
    if not candidates:
        raise ConstructionFailure(f"no leaf-block vertex of a private component touches {hub}", invariant="leaf-contact")
    return sort_vertices(candidates)[0]


def _surplus_connected(state: ReplayState, vertices: Set[Vertex]) -> bool:
    rest = vertices & set(state.adj)
    if not rest:
        return False
    sub = Graph({v: state.adj[v] & rest for v in rest})
    return sub.is_connected() and any(state.caps[v] > len(state.adj[v]) for v in rest)


def general_certificate(
    graph: Graph,
    params: MinorParams,
    *,
    check_preconditions: bool = True,
    ledger: Optional[ClaimLedger] = None,
) -> PlanarResult:
    """Certificate for (G, min(k, d)) with k derived from the excluded K_{s,t}."""

    if check_preconditions:
        if not vertex_connectivity_at_least(graph, params.s):
            raise PreconditionError(f"graph is not {params.s}-connected")
        if graph.is_connected() and is_gdp_tree(graph):
            raise PreconditionError("graph is a GDP-tree")
    k = params.k
    caps = CapMap.truncated(graph, k)
    high = frozenset(v for v in graph.vertices if graph.degree(v) >= k)
    if not high:
        return PlanarResult(degree_certificate(graph, caps), "degree", context={"params": params.to_dict()})

    ledger = ledger if ledger is not None else ClaimLedger()
    ledger.header.update({"n": graph.n, "m": graph.m, **params.to_dict()})
    state = ReplayState.from_graph(graph, caps)
    ops = _normalise_high(graph, state, high, params)
    low = frozenset(graph.vertices) - high
    components = [frozenset(c) for c in graph.subgraph(low).components()]
    guarded = [c for c in components if is_gdp_tree(graph.subgraph(c))]
    steps = _peel_high(guarded, high, state, params)
    protected: List[FrozenSet[Vertex]] = []

    for t, step in enumerate(steps):
        u = step.vertex
        entry = ClaimRound(round_index=t + 1, vertex=u, cap_before=state.caps[u])
        try:
            for index in step.private:
                deleted: List[Operation] = []
                rest = _shrink_to_contact(state, set(guarded[index]), u, deleted)
                entry.vertex_deletes += len(deleted)
                ops.extend(deleted)
                target = _contact_vertex(state, rest, u)
                cost = state.caps[target]
                ops.append(Operation.edge_delete(u, target))
                state.apply(ops[-1])
                entry.protected.append(str(index))
                entry.edge_deletes.append({"x": u, "y": target, "cost": cost, "component": index})
                protected.append(guarded[index])
            ops.append(Operation.vertex_delete(u))
            state.apply(ops[-1])
        except IllegalOperationError as exc:
            raise ConstructionFailure(str(exc), invariant="legal-move", details={"round": t + 1, "vertex": u}) from exc
        later = [s.vertex for s in steps[t + 1:]]
        entry.checks = {
            "v2-remaining": set(state.adj) & high == set(later),
            "low-caps-cover-degree": all(state.caps[v] >= len(state.adj[v]) for v in low if v in state.adj),
            "protected-surplus": all(_surplus_connected(state, set(c)) for c in protected),
            "v2-caps": all(state.caps[w] == params.q for w in later),
            "edge-cost-bound": all(row["cost"] <= params.block_bound for row in entry.edge_deletes),
        }
        ledger.record(entry)
        if not entry.ok:
            broken = next(name for name, ok in entry.checks.items() if not ok)
            raise ConstructionFailure(f"round {t + 1} ({u}) broke {broken}", invariant=broken, details=entry.to_dict())

    for comp in state.graph().components():
        ops.extend(degree_route(state, set(comp)))
    result = verify_certificate(graph, caps, ops)
    if not result.accepted:
        raise ConstructionFailure(f"certificate rejected at step {result.step}: {result.reason}", invariant="verify")
    ledger.summary.update({"ops": len(ops), "max_edge_delete_cost": ledger.max_edge_delete_cost()})
    log.info("K_{%d,%d}-free certificate: k=%d, %d ops over %d V_2 rounds", params.s, params.t, k, len(ops), len(steps))
    context = {"params": params.to_dict(), "v1": len(low), "v2": len(high), "order": [s.vertex for s in steps]}
    return PlanarResult(Certificate.build(graph, caps, ops), "minor", ledger, context)
