from __future__ import annotations

"""Exact f-choosability.

Cheap sufficient conditions run first: surplus peeling, components, a weak*
certificate and an f-AT orientation. Otherwise list assignments are
enumerated vertex by vertex in BFS order. A new list draws from the colours
already in use plus consecutive fresh colours, which covers every assignment
up to renaming. A prefix that is already not colourable is a witness.
"""

from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from ..alon_tarsi.at import is_f_at
from ..calculus.search import CalculusSearch
from ..config import DEFAULT_SETTINGS, SolverSettings
from ..graph.core import CapMap, Graph, Vertex
from ..utils import get_logger
from .base import NodeCounter, OracleBudgetExceeded, OracleResult, bfs_order, peel_surplus
from .lists import ListAssignment, solve_list_colouring

log = get_logger(__name__)

SHORTCUT_SEARCH_BUDGET = 100_000


def _fill(graph: Graph, caps: Mapping[Vertex, int], partial: Mapping[Vertex, FrozenSet]) -> ListAssignment:
    lists: Dict[Vertex, FrozenSet] = {}
    for vertex in graph.vertices:
        if vertex in partial:
            lists[vertex] = frozenset(partial[vertex])
        else:
            lists[vertex] = frozenset(f"{vertex}#{i}" for i in range(caps[vertex]))
    return ListAssignment(lists)


def certified_by_shortcut(graph: Graph, caps: Mapping[Vertex, int], settings: SolverSettings) -> Optional[str]:
    """Name of a sufficient condition showing (G, f) is choosable, if one applies."""

    if not settings.use_certificates:
        return None
    search = CalculusSearch("weakstar", settings.with_budget(min(settings.node_budget, SHORTCUT_SEARCH_BUDGET)))
    if search.decide(graph, caps).is_yes:
        return "weakstar"
    if graph.m <= settings.limits.at_max_edges and is_f_at(graph, caps, settings).is_yes:
        return "alon-tarsi"
    return None


def _find_bad_assignment(
    graph: Graph, caps: Mapping[Vertex, int], counter: NodeCounter
) -> Optional[Dict[Vertex, FrozenSet[int]]]:
    order = bfs_order(graph)
    position = {v: i for i, v in enumerate(order)}
    lists: Dict[Vertex, FrozenSet[int]] = {}

    def prefix_colourable(upto: int) -> bool:
        prefix = graph.subgraph(order[:upto])
        return solve_list_colouring(prefix, ListAssignment({v: lists[v] for v in prefix.vertices})) is not None

    def assign(index: int, used: int) -> bool:
        counter.tick()
        if index > 0:
            last = order[index - 1]
            has_back_edge = any(position[w] < index - 1 for w in graph.neighbours(last))
            if has_back_edge and not prefix_colourable(index):
                return True
        if index == len(order):
            return False
        vertex = order[index]
        size = caps[vertex]
        for fresh in range(0, size + 1):
            reused = size - fresh
            if reused > used:
                continue
            new_colours = tuple(range(used, used + fresh))
            for old in combinations(range(used), reused):
                lists[vertex] = frozenset(old + new_colours)
                if assign(index + 1, used + fresh):
                    return True
            lists.pop(vertex, None)
        return False

    return dict(lists) if assign(0, 0) else None


def _decide_core(
    graph: Graph, caps: Mapping[Vertex, int], settings: SolverSettings, counter: NodeCounter
) -> Tuple[str, Optional[Dict[Vertex, FrozenSet]], Optional[str]]:
    via = certified_by_shortcut(graph, caps, settings)
    if via is not None:
        return "yes", None, via
    if graph.n > settings.limits.choosable_max_n:
        return "unknown", None, f"core of {graph.n} vertices exceeds choosable_max_n={settings.limits.choosable_max_n}"
    bad = _find_bad_assignment(graph, caps, counter)
    if bad is None:
        return "yes", None, "enumeration"
    return "no", bad, "enumeration"


def is_f_choosable(
    graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings] = None
) -> OracleResult:
    """Decide f-choosability; a "no" carries a non-colourable f-assignment."""

    settings = settings or DEFAULT_SETTINGS
    CapMap.for_graph(graph, caps)
    caps = {v: int(caps[v]) for v in graph.vertices}
    zero = [v for v in graph.vertices if caps[v] <= 0]
    if zero:
        return OracleResult("no", _fill(graph, caps, {}), reason=f"vertex {zero[0]} has cap 0", via="cap")
    core, _ = peel_surplus(graph, caps)
    counter = NodeCounter(settings.node_budget)
    vias: List[str] = []
    try:
        for component in core.components():
            sub = core.subgraph(component)
            status, bad, via = _decide_core(sub, caps, settings, counter)
            if status == "no":
                assert bad is not None
                log.debug("no list colouring on component %s", list(component))
                return OracleResult("no", _fill(graph, caps, bad), counter.used, via=via)
            if status == "unknown":
                return OracleResult("unknown", nodes=counter.used, reason=via)
            if via:
                vias.append(via)
    except OracleBudgetExceeded as exc:
        return OracleResult("unknown", nodes=counter.used, reason=str(exc))
    return OracleResult("yes", nodes=counter.used, via="+".join(sorted(set(vias))) or "peeling")
