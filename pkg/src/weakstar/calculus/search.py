from __future__ import annotations

"""Exact memoised search for weak* and strict weak f-degeneracy.

Each node first peels surplus vertices (f(v) > d(v)): such a vertex can be
deleted last, so (G, f) is degenerate iff (G - v, f restricted) is. Components
are then solved independently, and the remaining core is looked up in a memo
keyed by its canonical form with caps as vertex colours. Refuted cores are
also stored per underlying graph for dominance: any cap vector pointwise
below a refuted one is refuted too.

In normalised weak* mode a ReduceValue is only explored fused with the
EdgeDelete that uses the reduced vertex as reference, branching over the
reference level. Reference mode explores ReduceValue, EdgeDelete and
VertexDelete independently.
"""

from dataclasses import dataclass
from typing import Dict, List, Literal, Mapping, Optional, Tuple

import networkx as nx

from ..config import DEFAULT_SETTINGS, Outcome, SolverSettings
from ..graph.canonical import canonical_form
from ..graph.core import CapMap, Graph, Vertex, vertex_key
from ..utils import get_logger
from .certificate import Certificate, verify_certificate
from .ops import Operation
from .strict import strict_degeneracy

log = get_logger(__name__)

SearchMode = Literal["weakstar", "strictweak"]
_Encoded = Tuple[Tuple[str, int, Optional[int], Optional[int]], ...]


class BudgetExceededError(RuntimeError):
    """Raised inside a search when the node budget is exhausted."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"search node budget of {budget} exhausted")
        self.budget = budget


@dataclass(frozen=True)
class SearchOutcome:
    status: Outcome
    mode: SearchMode
    certificate: Optional[Certificate]
    nodes: int
    budget: int

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "status": self.status,
            "mode": self.mode,
            "nodes": self.nodes,
            "budget": self.budget,
        }
        if self.certificate is not None:
            payload["certificate_ops"] = len(self.certificate.ops)
        return payload


@dataclass
class SearchStats:
    nodes: int = 0
    memo_hits: int = 0
    dominance_hits: int = 0
    peeled: int = 0


_Move = Tuple[List[Operation], Graph, Dict[Vertex, int]]


class CalculusSearch:
    """Decision procedure for one mode; memo tables persist across calls."""

    def __init__(
        self,
        mode: SearchMode = "weakstar",
        settings: Optional[SolverSettings] = None,
        *,
        normalized: bool = True,
    ) -> None:
        if mode not in ("weakstar", "strictweak"):
            raise ValueError(f"unknown search mode {mode!r}")
        self.mode: SearchMode = mode
        self.settings = settings or DEFAULT_SETTINGS
        self.normalized = normalized
        self.stats = SearchStats()
        self._memo: Dict[Tuple, Optional[_Encoded]] = {}
        self._refuted: Dict[Tuple, List[Tuple[int, ...]]] = {}
        self._limit = 0

    # public ---------------------------------------------------------------------------------
    def decide(self, graph: Graph, caps: Mapping[Vertex, int]) -> SearchOutcome:
        CapMap(caps).check_domain(graph)
        budget = self.settings.node_budget
        start = self.stats.nodes
        self._limit = start + budget
        try:
            ops = self._solve(graph, {v: int(caps[v]) for v in graph.vertices})
        except BudgetExceededError:
            log.debug("%s search gave up after %d nodes", self.mode, self.stats.nodes - start)
            return SearchOutcome("unknown", self.mode, None, self.stats.nodes - start, budget)
        used = self.stats.nodes - start
        log.debug(
            "%s search: n=%d nodes=%d memo_hits=%d dominance_hits=%d",
            self.mode,
            graph.n,
            used,
            self.stats.memo_hits,
            self.stats.dominance_hits,
        )
        if ops is None:
            return SearchOutcome("no", self.mode, None, used, budget)
        cert = Certificate.build(graph, caps, ops)
        result = verify_certificate(graph, caps, cert)
        if not result.accepted:
            raise AssertionError(f"search produced a rejected certificate (step {result.step}: {result.reason})")
        return SearchOutcome("yes", self.mode, cert, used, budget)

    # recursion ------------------------------------------------------------------------------
    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self._limit:
            raise BudgetExceededError(self.settings.node_budget)

    def _solve(self, graph: Graph, caps: Dict[Vertex, int]) -> Optional[List[Operation]]:
        self._tick()
        if graph.n == 0:
            return []
        if any(caps[v] <= 0 for v in graph.vertices):
            return None
        peeled: List[Vertex] = []
        while True:
            surplus = [v for v in graph.vertices if caps[v] > graph.degree(v)]
            if not surplus:
                break
            peeled.extend(surplus)
            graph = graph.remove_vertices(surplus)
            for v in surplus:
                del caps[v]
        self.stats.peeled += len(peeled)
        tail = [Operation.vertex_delete(v) for v in reversed(peeled)]
        if graph.n == 0:
            return tail
        components = graph.components()
        if len(components) > 1:
            ops: List[Operation] = []
            for component in components:
                sub = graph.subgraph(component)
                part = self._solve_core(sub, {v: caps[v] for v in component})
                if part is None:
                    return None
                ops.extend(part)
            return ops + tail
        core = self._solve_core(graph, caps)
        if core is None:
            return None
        return core + tail

    def _solve_core(self, graph: Graph, caps: Dict[Vertex, int]) -> Optional[List[Operation]]:
        if self.settings.canonical_memo:
            form = canonical_form(graph, caps)
            key = form.key
            labelling = form.labelling
        else:
            labelling = graph.vertices
            key = (labelling, graph.edges, tuple(caps[v] for v in labelling))
        if key in self._memo:
            self.stats.memo_hits += 1
            stored = self._memo[key]
            return None if stored is None else self._decode(stored, labelling)
        if self.settings.dominance_pruning and self._dominated(graph, caps):
            self.stats.dominance_hits += 1
            return None
        for prefix, child, child_caps in self._moves(graph, caps):
            found = self._solve(child, child_caps)
            if found is not None:
                ops = prefix + found
                self._memo[key] = self._encode(ops, labelling)
                return ops
        self._memo[key] = None
        if self.settings.dominance_pruning:
            self._record_refuted(graph, caps)
        return None

    # memo encoding ---------------------------------------------------------------------------
    @staticmethod
    def _encode(ops: List[Operation], labelling: Tuple[Vertex, ...]) -> _Encoded:
        position = {v: i for i, v in enumerate(labelling)}
        return tuple((op.kind, position[op.x], None if op.y is None else position[op.y], op.s) for op in ops)

    @staticmethod
    def _decode(encoded: _Encoded, labelling: Tuple[Vertex, ...]) -> List[Operation]:
        return [
            Operation(kind, labelling[x], None if y is None else labelling[y], s)  # type: ignore[arg-type]
            for kind, x, y, s in encoded
        ]

    def _dominance_key(self, graph: Graph) -> Tuple[Tuple, Tuple[Vertex, ...]]:
        if self.settings.canonical_memo:
            form = canonical_form(graph)
            return form.key, form.labelling
        return (graph.vertices, graph.edges), graph.vertices

    def _dominated(self, graph: Graph, caps: Mapping[Vertex, int]) -> bool:
        key, labelling = self._dominance_key(graph)
        refuted = self._refuted.get(key)
        if not refuted:
            return False
        vector = tuple(caps[v] for v in labelling)
        return any(all(a <= b for a, b in zip(vector, bad)) for bad in refuted)

    def _record_refuted(self, graph: Graph, caps: Mapping[Vertex, int]) -> None:
        key, labelling = self._dominance_key(graph)
        vector = tuple(caps[v] for v in labelling)
        bucket = self._refuted.setdefault(key, [])
        if any(all(a <= b for a, b in zip(vector, bad)) for bad in bucket):
            return
        bucket[:] = [bad for bad in bucket if not all(b <= a for a, b in zip(vector, bad))]
        bucket.append(vector)

    # move generation -------------------------------------------------------------------------
    def _moves(self, graph: Graph, caps: Dict[Vertex, int]) -> List[_Move]:
        moves: List[_Move] = []
        order = sorted(graph.vertices, key=lambda v: (graph.degree(v) - caps[v], vertex_key(v)))
        for x in order:
            child_caps = {v: c for v, c in caps.items() if v != x}
            for other in graph.neighbours(x):
                child_caps[other] = max(0, child_caps[other] - 1)
            moves.append(([Operation.vertex_delete(x)], graph.remove_vertices([x]), child_caps))
        if self.mode == "strictweak":
            for x in order:
                for y in graph.sorted_neighbours(x):
                    if caps[x] <= caps[y]:
                        continue
                    child_caps = {v: c for v, c in caps.items() if v != x}
                    for other in graph.neighbours(x):
                        if other != y:
                            child_caps[other] = max(0, child_caps[other] - 1)
                    moves.append(([Operation.delete_save(x, y)], graph.remove_vertices([x]), child_caps))
            return moves
        if self.normalized:
            for x in order:
                for y in graph.sorted_neighbours(x):
                    top = min(caps[y], caps[x] - 1)
                    for level in range(top, 0, -1):
                        prefix: List[Operation] = []
                        if level < caps[y]:
                            prefix.append(Operation.reduce(y, caps[y] - level))
                        prefix.append(Operation.edge_delete(x, y))
                        child_caps = dict(caps)
                        child_caps[y] = level
                        child_caps[x] = caps[x] - level
                        moves.append((prefix, graph.remove_edges([(x, y)]), child_caps))
            return moves
        for x in order:
            for y in graph.sorted_neighbours(x):
                if caps[x] > caps[y]:
                    child_caps = dict(caps)
                    child_caps[x] = caps[x] - caps[y]
                    moves.append(([Operation.edge_delete(x, y)], graph.remove_edges([(x, y)]), child_caps))
            for amount in range(1, caps[x]):
                child_caps = dict(caps)
                child_caps[x] = caps[x] - amount
                moves.append(([Operation.reduce(x, amount)], graph, child_caps))
        return moves


# convenience entry points -------------------------------------------------------------------
def decide_weak_star(
    graph: Graph,
    caps: Mapping[Vertex, int],
    settings: Optional[SolverSettings] = None,
    *,
    normalized: bool = True,
) -> SearchOutcome:
    return CalculusSearch("weakstar", settings, normalized=normalized).decide(graph, caps)


def decide_strict_weak(
    graph: Graph,
    caps: Mapping[Vertex, int],
    settings: Optional[SolverSettings] = None,
) -> SearchOutcome:
    return CalculusSearch("strictweak", settings).decide(graph, caps)


def clique_number(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    return max(len(clique) for clique in nx.find_cliques(graph.to_networkx()))


def _least_constant(graph: Graph, mode: SearchMode, settings: Optional[SolverSettings]) -> int:
    if graph.n == 0:
        raise ValueError("degeneracy numbers are defined for nonempty graphs")
    search = CalculusSearch(mode, settings)
    upper = strict_degeneracy(graph)
    for k in range(max(1, clique_number(graph)), upper):
        outcome = search.decide(graph, CapMap.constant(graph, k))
        if outcome.status == "unknown":
            raise BudgetExceededError(outcome.budget)
        if outcome.is_yes:
            return k
    return upper


def weak_star_degeneracy(graph: Graph, settings: Optional[SolverSettings] = None) -> int:
    """Least d with (G, d) weak* degenerate; bounded by clique number and sd(G)."""

    return _least_constant(graph, "weakstar", settings)


def strict_weak_degeneracy(graph: Graph, settings: Optional[SolverSettings] = None) -> int:
    return _least_constant(graph, "strictweak", settings)
