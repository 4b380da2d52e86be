from __future__ import annotations

"""K_{s-1, k^{s-1}} with lists that defeat min(k, d)-choosability."""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..config import DEFAULT_SETTINGS, SolverSettings
from ..graph.core import Graph, Vertex
from ..oracles.lists import ListAssignment, solve_list_colouring
from ..utils import get_logger

log = get_logger(__name__)


class SharpnessBudgetError(ValueError):
    """Raised when the instance would exceed the configured vertex limit."""


@dataclass(frozen=True)
class SharpnessInstance:
    s: int
    k: int
    graph: Graph
    lists: ListAssignment

    @property
    def side_a(self) -> List[Vertex]:
        return [f"a{i}" for i in range(1, self.s)]

    def caps(self) -> Dict[Vertex, int]:
        return {v: min(self.k, self.graph.degree(v)) for v in self.graph.vertices}

    def check(self) -> Dict[str, object]:
        colouring = solve_list_colouring(self.graph, self.lists)
        return {
            "s": self.s,
            "k": self.k,
            "vertices": self.graph.n,
            "f_assignment": self.lists.is_f_assignment(self.caps()),
            "colourable": colouring is not None,
        }


def _colour(value: int, side: int) -> str:
    return f"{value}:{side}"


def build_sharpness_instance(s: int, k: int, settings: Optional[SolverSettings] = None) -> SharpnessInstance:
    """Side A = a1..a{s-1} with L(a_i) = [k] x {i}; side B indexed by [k]^{s-1}."""

    settings = settings or DEFAULT_SETTINGS
    if s < 2 or k < 1:
        raise ValueError("sharpness instance needs s >= 2 and k >= 1")
    total = (s - 1) + k ** (s - 1)
    if total > settings.limits.sharpness_max_vertices:
        raise SharpnessBudgetError(
            f"K_{{{s - 1},{k ** (s - 1)}}} has {total} vertices, above the limit of {settings.limits.sharpness_max_vertices}"
        )
    side_a = [f"a{i}" for i in range(1, s)]
    lists: Dict[Vertex, List[str]] = {a: [_colour(c, i) for c in range(1, k + 1)] for i, a in enumerate(side_a, start=1)}
    edges: List[Tuple[Vertex, Vertex]] = []
    side_b: List[Vertex] = []
    for index in product(range(1, k + 1), repeat=s - 1):
        b = "b" + "_".join(str(c) for c in index)
        side_b.append(b)
        lists[b] = [_colour(c, i) for i, c in enumerate(index, start=1)]
        edges.extend((a, b) for a in side_a)
    graph = Graph.from_edges(side_a + side_b, edges)
    log.debug("sharpness instance s=%d k=%d: %d vertices", s, k, graph.n)
    return SharpnessInstance(s, k, graph, ListAssignment.of(lists))
