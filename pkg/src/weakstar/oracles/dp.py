from __future__ import annotations

"""Exact DP f-colourability.

Only covers with maximal matchings need checking: adding links can only
destroy colourings. Along a BFS spanning forest the child's nodes are still
free to permute when its tree edge is placed, so a tree edge reduces to the
choice of which parent nodes are matched. The remaining edges range over all
injections, identity first.
"""

from itertools import combinations, permutations
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..calculus.search import CalculusSearch
from ..config import DEFAULT_SETTINGS, SolverSettings
from ..graph.core import CapMap, Edge, Graph, Vertex, edge_key
from ..utils import get_logger
from .base import NodeCounter, OracleBudgetExceeded, OracleResult, bfs_order, peel_surplus
from .choosability import SHORTCUT_SEARCH_BUDGET
from .covers import Cover, Link, Node, solve_cover_colouring

log = get_logger(__name__)


def cover_nodes(vertex: Vertex, size: int) -> Tuple[Node, ...]:
    return tuple(f"{vertex}#{i}" for i in range(size))


def spanning_forest(graph: Graph) -> Tuple[List[Tuple[Vertex, Vertex]], List[Edge]]:
    """(tree edges as (parent, child) in BFS order, the other edges)."""

    order = bfs_order(graph)
    position = {v: i for i, v in enumerate(order)}
    tree: List[Tuple[Vertex, Vertex]] = []
    used = set()
    for child in order:
        earlier = [w for w in graph.sorted_neighbours(child) if position[w] < position[child]]
        if earlier:
            parent = min(earlier, key=position.__getitem__)
            tree.append((parent, child))
            used.add(edge_key(parent, child))
    rest = [e for e in graph.edges if e not in used]
    return tree, rest


def tree_matchings(parent: Sequence[Node], child: Sequence[Node]) -> Iterator[List[Link]]:
    if len(child) >= len(parent):
        yield list(zip(parent, child))
        return
    for chosen in combinations(parent, len(child)):
        yield list(zip(chosen, child))


def edge_matchings(first: Sequence[Node], second: Sequence[Node]) -> Iterator[List[Link]]:
    if len(first) <= len(second):
        for image in permutations(second, len(first)):
            yield list(zip(first, image))
    else:
        for image in permutations(first, len(second)):
            yield list(zip(image, second))


def maximal_covers(
    graph: Graph, sizes: Mapping[Vertex, int], counter: Optional[NodeCounter] = None
) -> Iterator[Cover]:
    """Every cover with maximal matchings, up to renaming nodes, identity first."""

    nodes = {v: cover_nodes(v, sizes[v]) for v in graph.vertices}
    tree, rest = spanning_forest(graph)
    choices: List[Tuple[str, Tuple[Vertex, Vertex]]] = [("tree", e) for e in tree] + [("edge", e) for e in rest]
    links: List[Link] = []

    def walk(index: int) -> Iterator[Cover]:
        if counter is not None:
            counter.tick()
        if index == len(choices):
            yield Cover.build(nodes, links)
            return
        kind, (a, b) = choices[index]
        options = tree_matchings(nodes[a], nodes[b]) if kind == "tree" else edge_matchings(nodes[a], nodes[b])
        for matching in options:
            links.extend(matching)
            yield from walk(index + 1)
            del links[len(links) - len(matching):]

    yield from walk(0)


def _empty_cover(graph: Graph, caps: Mapping[Vertex, int]) -> Cover:
    return Cover.build({v: cover_nodes(v, caps[v]) for v in graph.vertices}, [])


def _decide_core(
    graph: Graph, caps: Mapping[Vertex, int], settings: SolverSettings, counter: NodeCounter
) -> Tuple[str, Optional[Cover], Optional[str]]:
    if settings.use_certificates:
        search = CalculusSearch("weakstar", settings.with_budget(min(settings.node_budget, SHORTCUT_SEARCH_BUDGET)))
        if search.decide(graph, caps).is_yes:
            return "yes", None, "weakstar"
    if graph.n > settings.limits.dp_colourable_max_n:
        return "unknown", None, f"core of {graph.n} vertices exceeds dp_colourable_max_n={settings.limits.dp_colourable_max_n}"
    for cover in maximal_covers(graph, caps, counter):
        if solve_cover_colouring(graph, cover, validate=False) is None:
            return "no", cover, "enumeration"
    return "yes", None, "enumeration"


def is_dp_f_colourable(
    graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings] = None
) -> OracleResult:
    """Decide DP f-colourability; a "no" carries an uncolourable cover."""

    settings = settings or DEFAULT_SETTINGS
    CapMap.for_graph(graph, caps)
    caps = {v: int(caps[v]) for v in graph.vertices}
    zero = [v for v in graph.vertices if caps[v] <= 0]
    if zero:
        return OracleResult("no", _empty_cover(graph, caps), reason=f"vertex {zero[0]} has cap 0", via="cap")
    core, _ = peel_surplus(graph, caps)
    counter = NodeCounter(settings.node_budget)
    vias: List[str] = []
    try:
        for component in core.components():
            sub = core.subgraph(component)
            status, cover, via = _decide_core(sub, caps, settings, counter)
            if status == "no":
                assert cover is not None
                log.debug("no cover colouring on component %s", list(component))
                nodes: Dict[Vertex, Tuple[Node, ...]] = {v: cover_nodes(v, caps[v]) for v in graph.vertices}
                return OracleResult("no", Cover.build(nodes, cover.links), counter.used, via=via)
            if status == "unknown":
                return OracleResult("unknown", nodes=counter.used, reason=via)
            if via:
                vias.append(via)
    except OracleBudgetExceeded as exc:
        return OracleResult("unknown", nodes=counter.used, reason=str(exc))
    return OracleResult("yes", nodes=counter.used, via="+".join(sorted(set(vias))) or "peeling")
