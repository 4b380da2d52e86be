from __future__ import annotations

"""Constructive certificates for (G, f) with f >= d on a connected non-GDP-tree.

If some vertex already has f(v) > d(v), greedy strict deletion empties the
component. Otherwise a block B that is neither complete nor a cycle is
isolated by strictly deleting every component hanging off it (each has
surplus next to its attachment vertex), and one opening move on B creates
surplus:

* an edge ab with d(a) > d(b): EdgeDelete(a, b), VertexDelete(a);
* B regular: an induced path w-y-x with B - {w, x} connected (one exists by
  Lovasz's lemma): VertexDelete(w), EdgeDelete(x, y), VertexDelete(x).

With ``strict_weak`` the EdgeDelete/VertexDelete pairs are emitted as
DeleteSave, giving a strict weak certificate.
"""

from itertools import combinations
from typing import Dict, List, Mapping, Optional, Set

import networkx as nx

from ..graph.blocks import bad_blocks
from ..graph.core import CapMap, Graph, Vertex, vertex_key
from ..utils import get_logger
from .certificate import Certificate, verify_certificate
from .ops import Operation, ReplayState
from .search import CalculusSearch
from .strict import strict_finish

log = get_logger(__name__)

SEARCH_FALLBACK_MAX_N = 8


class ConstructionFailure(RuntimeError):
    """A constructive procedure could not continue; ``invariant`` names the broken step."""

    def __init__(self, message: str, *, invariant: str, details: Optional[Dict[str, object]] = None) -> None:
        super().__init__(message)
        self.invariant = invariant
        self.details = details or {}


def _component_graph(state: ReplayState, vertices: Set[Vertex]) -> Graph:
    return Graph({v: state.adj[v] & vertices for v in vertices})


def _opening_path(block: Graph) -> Optional[tuple]:
    nxg = block.to_networkx()
    for y in block.vertices:
        for w, x in combinations(block.sorted_neighbours(y), 2):
            if block.has_edge(w, x):
                continue
            rest = nxg.copy()
            rest.remove_nodes_from([w, x])
            if nx.is_connected(rest):
                return w, y, x
    return None


def degree_route(state: ReplayState, vertices: Set[Vertex], *, strict_weak: bool = False) -> List[Operation]:
    """Delete the connected component ``vertices`` of ``state``; caps must dominate degrees."""

    vertices = set(vertices)
    for v in vertices:
        if state.adj[v] - vertices:
            raise ConstructionFailure("degree route needs a whole component", invariant="component")
        if state.caps[v] < len(state.adj[v]):
            raise ConstructionFailure(
                f"degree route needs f >= d (vertex {v})",
                invariant="caps-dominate-degree",
                details={"vertex": v, "cap": state.caps[v], "degree": len(state.adj[v])},
            )
    if any(state.caps[v] > len(state.adj[v]) for v in vertices):
        ops = strict_finish(state, vertices)
        if ops is None:
            raise ConstructionFailure("strict deletion stalled on a component with surplus", invariant="surplus")
        return ops

    graph = _component_graph(state, vertices)
    blocks = bad_blocks(graph)
    if not blocks:
        raise ConstructionFailure("every block is complete or a cycle", invariant="not-gdp-tree")
    block = blocks[0]
    ops: List[Operation] = []
    for hanging in graph.remove_vertices(block).components():
        part = strict_finish(state, set(hanging))
        if part is None:
            raise ConstructionFailure("hanging component could not be deleted", invariant="hanging-surplus")
        ops.extend(part)

    sub = _component_graph(state, set(block))
    opening: List[Operation] = []
    unbalanced = None
    for a, b in sorted(sub.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))):
        if sub.degree(a) != sub.degree(b):
            unbalanced = (a, b) if sub.degree(a) > sub.degree(b) else (b, a)
            break
    if unbalanced is not None:
        a, b = unbalanced
        opening = [Operation.delete_save(a, b)] if strict_weak else [Operation.edge_delete(a, b), Operation.vertex_delete(a)]
    else:
        path = _opening_path(sub)
        if path is None:
            raise ConstructionFailure("no induced path with connected remainder", invariant="opening-path")
        w, y, x = path
        opening = [Operation.vertex_delete(w)]
        opening += [Operation.delete_save(x, y)] if strict_weak else [Operation.edge_delete(x, y), Operation.vertex_delete(x)]
    state.apply_all(opening)
    ops.extend(opening)
    finish = strict_finish(state, set(sub.vertices) & set(state.adj))
    if finish is None:
        raise ConstructionFailure("opening move left no surplus", invariant="opening-surplus")
    ops.extend(finish)
    return ops


def degree_certificate(
    graph: Graph,
    caps: Optional[Mapping[Vertex, int]] = None,
    *,
    strict_weak: bool = False,
) -> Certificate:
    """Certificate for every component of ``graph`` under caps >= degree.

    Components that are GDP-trees with caps equal to degrees are rejected.
    """

    cap_map = CapMap.degree(graph) if caps is None else CapMap.for_graph(graph, caps)
    state = ReplayState.from_graph(graph, cap_map)
    ops: List[Operation] = []
    try:
        for component in graph.components():
            ops.extend(degree_route(state, set(component), strict_weak=strict_weak))
    except ConstructionFailure as exc:
        if graph.n > SEARCH_FALLBACK_MAX_N:
            raise
        log.info("degree route failed (%s); falling back to exhaustive search", exc.invariant)
        mode = "strictweak" if strict_weak else "weakstar"
        outcome = CalculusSearch(mode).decide(graph, cap_map)
        if outcome.certificate is None:
            raise
        return outcome.certificate
    result = verify_certificate(graph, cap_map, ops)
    if not result.accepted:
        raise ConstructionFailure(
            f"degree route certificate rejected at step {result.step}: {result.reason}",
            invariant="verify",
        )
    log.debug("degree route on %d vertices: %d ops", graph.n, len(ops))
    return Certificate.build(graph, cap_map, ops)
