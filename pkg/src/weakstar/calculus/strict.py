from __future__ import annotations

"""Strict f-degeneracy: greedy peeling of vertices with d(v) < f(v)."""

import heapq
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Set, Tuple

from ..graph.core import Graph, Vertex, sort_vertices, vertex_key
from ..graph.degeneracy import degeneracy
from .ops import Operation, ReplayState


@dataclass(frozen=True)
class StrictResult:
    degenerate: bool
    ordering: Tuple[Vertex, ...]
    stuck: Tuple[Vertex, ...] = ()

    @property
    def outcome(self) -> str:
        return "yes" if self.degenerate else "no"

    def orientation(self, graph: Graph) -> List[Tuple[Vertex, Vertex]]:
        """Arcs from later to earlier removal; in-degree at v is below f(v)."""

        position = {v: i for i, v in enumerate(self.ordering)}
        arcs = []
        for a, b in graph.edges:
            arcs.append((a, b) if position[a] > position[b] else (b, a))
        return arcs


def strict_peel(adj: Mapping[Vertex, Set[Vertex]], caps: Mapping[Vertex, int]) -> Tuple[List[Vertex], List[Vertex]]:
    """Peel vertices with current degree below their cap (ties by vertex id).

    Returns the peeling order and the stuck residue.
    """

    degree: Dict[Vertex, int] = {v: len(n) for v, n in adj.items()}
    heap = [(vertex_key(v), v) for v in adj if degree[v] < caps[v]]
    heapq.heapify(heap)
    removed: Set[Vertex] = set()
    order: List[Vertex] = []
    while heap:
        _, vertex = heapq.heappop(heap)
        if vertex in removed:
            continue
        removed.add(vertex)
        order.append(vertex)
        for other in adj[vertex]:
            if other in removed:
                continue
            before = degree[other]
            degree[other] -= 1
            if before >= caps[other] > degree[other]:
                heapq.heappush(heap, (vertex_key(other), other))
    residue = sort_vertices(v for v in adj if v not in removed)
    return order, residue


def decide_strict_degenerate(graph: Graph, caps: Mapping[Vertex, int]) -> StrictResult:
    order, residue = strict_peel({v: set(graph.neighbours(v)) for v in graph.vertices}, caps)
    return StrictResult(degenerate=not residue, ordering=tuple(order), stuck=tuple(residue))


def strict_ops(order: List[Vertex]) -> List[Operation]:
    """VertexDeletes in reverse peeling order."""

    return [Operation.vertex_delete(v) for v in reversed(order)]


def strict_certificate(graph: Graph, caps: Mapping[Vertex, int]) -> Optional[List[Operation]]:
    result = decide_strict_degenerate(graph, caps)
    if not result.degenerate:
        return None
    return strict_ops(list(result.ordering))


def strict_finish(state: ReplayState, vertices: Optional[Set[Vertex]] = None) -> Optional[List[Operation]]:
    """Delete ``vertices`` (default: all) from a live replay state by strict peeling.

    The peel runs on the induced subgraph with the current caps; the state is
    only mutated when the whole set can be removed.
    """

    keep = set(state.adj) if vertices is None else set(vertices)
    adj = {v: state.adj[v] & keep for v in keep}
    order, residue = strict_peel(adj, {v: state.caps[v] for v in keep})
    if residue:
        return None
    ops = strict_ops(order)
    state.apply_all(ops)
    return ops


def strict_degeneracy(graph: Graph) -> int:
    """Least k with (G, k) strictly degenerate; equals degeneracy + 1."""

    if graph.n == 0:
        return 0
    return degeneracy(graph) + 1
