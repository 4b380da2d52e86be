from __future__ import annotations

"""Online list colouring (paintability) and its DP analogue.

Each round Lister spends tokens g with 0 <= g <= f, g != 0. In the list game
g is 0/1 and the marked vertices share one colour; in the DP game Lister
also lays a cover with g(v) nodes at v. Painter answers with a set X of the
marked vertices that can be coloured this round; the game continues on
G - X with f - g. Painter may as well colour a maximal such X, since the
game is monotone under deleting vertices. Painter wins once every vertex is
coloured and loses when some remaining vertex runs out of tokens.

Positions are memoised by canonical form with the remaining tokens as
vertex colours; surplus peeling and components apply as in list colouring.
"""

from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Literal, Mapping, Optional, Tuple

from ..calculus.search import CalculusSearch
from ..config import DEFAULT_SETTINGS, SolverSettings
from ..graph.canonical import canonical_key
from ..graph.core import CapMap, Graph, Vertex
from ..utils import get_logger
from .base import NodeCounter, OracleBudgetExceeded, OracleResult, peel_surplus
from .choosability import SHORTCUT_SEARCH_BUDGET
from .covers import Cover, solve_cover_colouring
from .dp import maximal_covers
from .lists import ListAssignment, solve_list_colouring

log = get_logger(__name__)

GameMode = Literal["list", "dp"]


def _is_independent(graph: Graph, subset: Tuple[Vertex, ...]) -> bool:
    return not any(graph.has_edge(a, b) for a, b in combinations(subset, 2))


def maximal_sets(candidates: Tuple[Vertex, ...], admissible) -> List[FrozenSet[Vertex]]:
    """Inclusion-maximal subsets accepted by ``admissible``, largest first."""

    found: List[FrozenSet[Vertex]] = []
    for size in range(len(candidates), 0, -1):
        for subset in combinations(candidates, size):
            chosen = frozenset(subset)
            if any(chosen <= other for other in found):
                continue
            if admissible(subset):
                found.append(chosen)
    return found


class PaintingGame:
    def __init__(self, mode: GameMode, counter: NodeCounter) -> None:
        self.mode = mode
        self.counter = counter
        self._memo: Dict[Tuple, bool] = {}

    def painter_wins(self, graph: Graph, caps: Mapping[Vertex, int]) -> bool:
        self.counter.tick()
        if graph.n == 0:
            return True
        if any(caps[v] <= 0 for v in graph.vertices):
            return False
        core, _ = peel_surplus(graph, caps)
        if core.n == 0:
            return True
        components = core.components()
        if len(components) > 1:
            return all(self.painter_wins(core.subgraph(c), caps) for c in components)
        key = canonical_key(core, {v: caps[v] for v in core.vertices})
        if key not in self._memo:
            self._memo[key] = self._solve(core, {v: caps[v] for v in core.vertices})
        return self._memo[key]

    def _lister_moves(self, graph: Graph, caps: Mapping[Vertex, int]) -> Iterator[Dict[Vertex, int]]:
        vertices = graph.vertices
        if self.mode == "list":
            for size in range(len(vertices), 0, -1):
                for marked in combinations(vertices, size):
                    yield {v: 1 if v in marked else 0 for v in vertices}
            return
        ranges = [range(caps[v], -1, -1) for v in vertices]
        moves = [dict(zip(vertices, values)) for values in product(*ranges)]
        moves.sort(key=lambda g: -sum(g.values()))
        for move in moves:
            if any(move.values()):
                yield move

    def _painter_answers(self, graph: Graph, marked: Tuple[Vertex, ...], cover: Optional[Cover]) -> List[FrozenSet[Vertex]]:
        if cover is None:
            sub = graph.subgraph(marked)
            return maximal_sets(marked, lambda s: _is_independent(sub, s))
        sub = graph.subgraph(marked)
        return maximal_sets(marked, lambda s: solve_cover_colouring(sub, cover, subset=s, validate=False) is not None)

    def _solve(self, graph: Graph, caps: Dict[Vertex, int]) -> bool:
        for move in self._lister_moves(graph, caps):
            marked = tuple(v for v in graph.vertices if move[v] > 0)
            rest = {v: caps[v] - move[v] for v in graph.vertices}
            covers: List[Optional[Cover]]
            if self.mode == "list":
                covers = [None]
            else:
                covers = maximal_covers(graph.subgraph(marked), move, self.counter)  # type: ignore[assignment]
            for cover in covers:
                answered = False
                for colour_set in self._painter_answers(graph, marked, cover):
                    remaining = graph.remove_vertices(colour_set)
                    if self.painter_wins(remaining, {v: rest[v] for v in remaining.vertices}):
                        answered = True
                        break
                if not answered:
                    return False
        return True


def _nested_lists_refute(core: Graph, caps: Mapping[Vertex, int], max_n: int) -> bool:
    """True when some core component of at most ``max_n`` vertices has no colouring from the lists {1..f(v)}."""

    for component in core.components():
        if len(component) > max_n:
            continue
        part = core.subgraph(component)
        lists = ListAssignment.of({v: range(1, caps[v] + 1) for v in part.vertices})
        if solve_list_colouring(part, lists) is None:
            return True
    return False


def _decide(
    mode: GameMode, graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings]
) -> OracleResult:
    settings = settings or DEFAULT_SETTINGS
    CapMap.for_graph(graph, caps)
    caps = {v: int(caps[v]) for v in graph.vertices}
    if any(caps[v] <= 0 for v in graph.vertices):
        return OracleResult("no", reason="a vertex has cap 0", via="cap")
    core, _ = peel_surplus(graph, caps)
    if settings.use_certificates and core.n:
        search = CalculusSearch("weakstar", settings.with_budget(min(settings.node_budget, SHORTCUT_SEARCH_BUDGET)))
        if search.decide(core, caps).is_yes:
            return OracleResult("yes", via="weakstar")
    if _nested_lists_refute(core, caps, settings.limits.choosable_max_n):
        return OracleResult("no", reason="not colourable from the lists {1..f(v)}", via="lists")
    limit = settings.limits.paintable_max_n if mode == "list" else settings.limits.dp_paintable_max_n
    largest = max((len(c) for c in core.components()), default=0)
    if largest > limit:
        return OracleResult("unknown", reason=f"core component of {largest} vertices exceeds the {mode} painting limit {limit}")
    counter = NodeCounter(settings.node_budget)
    game = PaintingGame(mode, counter)
    try:
        wins = game.painter_wins(core, caps)
    except OracleBudgetExceeded as exc:
        return OracleResult("unknown", nodes=counter.used, reason=str(exc))
    log.debug("%s painting game on %d core vertices: %s", mode, core.n, wins)
    return OracleResult("yes" if wins else "no", nodes=counter.used, via="game")


def decide_paintable(graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings] = None) -> OracleResult:
    return _decide("list", graph, caps, settings)


def decide_dp_paintable(graph: Graph, caps: Mapping[Vertex, int], settings: Optional[SolverSettings] = None) -> OracleResult:
    return _decide("dp", graph, caps, settings)
