from __future__ import annotations

"""Minimum-degree peeling: degeneracy orderings and the degeneracy number."""

import heapq
from typing import Dict, List, Optional, Tuple

from .core import CapMap, Graph, Vertex, vertex_key


def _peel(graph: Graph, cap: Optional[int]) -> Tuple[List[Vertex], int]:
    """Removal order by minimum current degree (ties by vertex id).

    Stops early and returns the partial order when the minimum exceeds ``cap``.
    """

    degree: Dict[Vertex, int] = graph.degrees()
    heap = [(d, vertex_key(v), v) for v, d in degree.items()]
    heapq.heapify(heap)
    removed: set = set()
    order: List[Vertex] = []
    worst = 0
    while heap:
        d, _, vertex = heapq.heappop(heap)
        if vertex in removed or d != degree[vertex]:
            continue
        if cap is not None and d > cap:
            return order, d
        worst = max(worst, d)
        removed.add(vertex)
        order.append(vertex)
        for other in graph.neighbours(vertex):
            if other not in removed:
                degree[other] -= 1
                heapq.heappush(heap, (degree[other], vertex_key(other), other))
    return order, worst


def degeneracy_ordering(
    graph: Graph, cap: int, *, components_consecutive: bool = False
) -> Optional[List[Vertex]]:
    """Ordering in which each vertex has at most ``cap`` earlier neighbours, or None."""

    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if not components_consecutive:
        order, _ = _peel(graph, cap)
        if len(order) != graph.n:
            return None
        return order[::-1]
    result: List[Vertex] = []
    for component in graph.components():
        sub = graph.subgraph(component)
        order, _ = _peel(sub, cap)
        if len(order) != sub.n:
            return None
        result.extend(order[::-1])
    return result


def degeneracy(graph: Graph) -> int:
    """Least d such that every subgraph has a vertex of degree at most d."""

    _, worst = _peel(graph, None)
    return worst


def earlier_neighbour_counts(graph: Graph, ordering: List[Vertex]) -> Dict[Vertex, int]:
    position = {v: i for i, v in enumerate(ordering)}
    return {v: sum(1 for u in graph.neighbours(v) if position[u] < position[v]) for v in ordering}


def truncated_cap(graph: Graph, k: int) -> CapMap:
    """f(v) = min(k, d(v))."""

    return CapMap.truncated(graph, k)
