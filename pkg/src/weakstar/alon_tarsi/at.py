from __future__ import annotations

"""f-AT decision and the Alon-Tarsi number.

G is f-AT when some orientation D has t_D + 1 <= f and diff(D) != 0. The
decision enumerates orientations edge by edge, pruning as soon as a partial
out-degree exceeds f - 1, and computes diff once per out-degree vector: two
orientations with the same out-degrees have the same |diff|.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Set, Tuple

from ..config import DEFAULT_SETTINGS, Outcome, SolverSettings
from ..graph.core import CapMap, Graph, Vertex
from ..utils import get_logger
from .eulerian import SizeLimitError, eulerian_diff
from .orientation import Arc, Orientation

log = get_logger(__name__)


@dataclass(frozen=True)
class ATResult:
    status: Outcome
    orientation: Optional[Orientation] = None
    diff: Optional[int] = None
    reason: Optional[str] = None

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"status": self.status, "diff": self.diff}
        if self.orientation is not None:
            payload["orientation"] = self.orientation.to_json()
        if self.reason:
            payload["reason"] = self.reason
        return payload


def _bounded_orientations(graph: Graph, bound: Mapping[Vertex, int]) -> Iterator[List[Arc]]:
    edges = list(graph.edges)
    out = {v: 0 for v in graph.vertices}
    arcs: List[Arc] = []

    def extend(index: int) -> Iterator[List[Arc]]:
        if index == len(edges):
            yield list(arcs)
            return
        a, b = edges[index]
        for tail, head in ((a, b), (b, a)):
            if out[tail] >= bound[tail]:
                continue
            out[tail] += 1
            arcs.append((tail, head))
            yield from extend(index + 1)
            arcs.pop()
            out[tail] -= 1

    return extend(0)


def is_f_at(graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings] = None) -> ATResult:
    settings = settings or DEFAULT_SETTINGS
    CapMap.for_graph(graph, caps)
    if graph.n == 0:
        return ATResult("yes", Orientation(graph, ()), 1)
    if any(caps[v] <= 0 for v in graph.vertices):
        return ATResult("no", reason="a vertex has cap 0")
    if graph.m > settings.limits.at_max_edges:
        return ATResult("unknown", reason=f"|E|={graph.m} exceeds at_max_edges={settings.limits.at_max_edges}")
    bound = {v: int(caps[v]) - 1 for v in graph.vertices}
    if sum(bound.values()) < graph.m:
        return ATResult("no", reason="caps leave too little out-degree")
    seen: Set[Tuple[int, ...]] = set()
    for arcs in _bounded_orientations(graph, bound):
        orientation = Orientation.from_arcs(graph, arcs)
        out = orientation.out_degree()
        key = tuple(out[v] for v in graph.vertices)
        if key in seen:
            continue
        seen.add(key)
        diff = eulerian_diff(orientation, max_edges=settings.limits.eulerian_max_edges)
        if diff != 0:
            log.debug("f-AT witness with out-degrees %s, diff %d", out, diff)
            return ATResult("yes", orientation, diff)
    return ATResult("no")


is_f_AT = is_f_at


def at_number(graph: Graph, settings: Optional[SolverSettings] = None) -> int:
    """Least k with G k-AT; raises SizeLimitError when the size guard is hit."""

    if graph.n == 0:
        return 0
    k = 1
    while True:
        result = is_f_at(graph, CapMap.constant(graph, k), settings)
        if result.status == "unknown":
            raise SizeLimitError(result.reason or "size limit")
        if result.is_yes:
            return k
        k += 1
