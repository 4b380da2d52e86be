from __future__ import annotations

"""Shared result type and node budget for the exact colouring oracles."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..config import Outcome
from ..graph.core import Graph, Vertex


class OracleBudgetExceeded(RuntimeError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"oracle node budget of {budget} exhausted")
        self.budget = budget


@dataclass(frozen=True)
class OracleResult:
    status: Outcome
    witness: Optional[Any] = None
    nodes: int = 0
    reason: Optional[str] = None
    via: Optional[str] = None

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"status": self.status, "nodes": self.nodes}
        if self.via:
            payload["via"] = self.via
        if self.reason:
            payload["reason"] = self.reason
        if self.witness is not None and hasattr(self.witness, "to_json"):
            payload["witness"] = self.witness.to_json()
        return payload


@dataclass
class NodeCounter:
    budget: int
    used: int = field(default=0)

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.budget:
            raise OracleBudgetExceeded(self.budget)


def peel_surplus(graph: Graph, caps: Mapping[Vertex, int]) -> Tuple[Graph, List[Vertex]]:
    """Repeatedly drop vertices with f(v) > d(v); returns the core and the peeled vertices."""

    peeled: List[Vertex] = []
    while True:
        surplus = [v for v in graph.vertices if caps[v] > graph.degree(v)]
        if not surplus:
            return graph, peeled
        peeled.extend(surplus)
        graph = graph.remove_vertices(surplus)


def bfs_order(graph: Graph) -> List[Vertex]:
    order: List[Vertex] = []
    seen: set = set()
    for start in graph.vertices:
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            vertex = queue.pop(0)
            order.append(vertex)
            for other in graph.sorted_neighbours(vertex):
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return order
