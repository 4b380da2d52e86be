from __future__ import annotations

"""G: one copy of H per ordered colour pair on the terminals, glued into a chain.

Copies share x and y; v3 of copy i is joined to u3 of copy i + 1, and x is
joined to y. With L(x) = L(y) = {a..g} every vertex has |L(v)| = min(d(v), 7),
and each of the 7 * 6 colourings of (x, y) is blocked inside its own copy.
"""

from dataclasses import dataclass, field
from itertools import permutations
from multiprocessing.pool import Pool
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..graph.connectivity import vertex_connectivity_at_least
from ..graph.core import Graph, Vertex
from ..oracles.lists import Colour, ListAssignment, solve_list_colouring
from ..utils import get_logger
from .gadget import TERMINALS, GadgetError, GadgetH, build_gadget_h

log = get_logger(__name__)

TERMINAL_COLOURS: Tuple[str, ...] = ("a", "b", "c", "d", "e", "f", "g")
TRUNCATION = len(TERMINAL_COLOURS)
ALL_PAIRS: Tuple[Tuple[str, str], ...] = tuple(permutations(TERMINAL_COLOURS, 2))

Pair = Tuple[str, str]


def copy_vertex(vertex: Vertex, index: int) -> Vertex:
    return vertex if vertex in TERMINALS else f"{vertex}@{index}"


@dataclass(frozen=True)
class GluedG:
    graph: Graph
    lists: ListAssignment
    pairs: Tuple[Pair, ...]
    gadget: GadgetH = field(repr=False, compare=False)

    @property
    def copies(self) -> int:
        return len(self.pairs)

    def copy_vertices(self, index: int) -> List[Vertex]:
        return [copy_vertex(v, index) for v in self.gadget.inner]


def _copy_lists(gadget: GadgetH, index: int, pair: Pair) -> Dict[Vertex, frozenset]:
    mapping = {"a": pair[0], "b": pair[1]}
    return {copy_vertex(v, index): frozenset(mapping.get(c, c) for c in gadget.lists[v]) for v in gadget.inner}


def check_glued(glued: GluedG) -> Dict[str, bool]:
    graph, lists = glued.graph, glued.lists
    checks = {
        "order": graph.n == glued.copies * len(glued.gadget.inner) + len(TERMINALS),
        "non-complete": not graph.is_complete(),
        "planar": nx.check_planarity(graph.to_networkx())[0],
        "list-sizes": all(len(lists[v]) == min(graph.degree(v), TRUNCATION) for v in graph.vertices),
        "three-connected": vertex_connectivity_at_least(graph, 3),
    }
    for name, ok in checks.items():
        if not ok:
            raise GadgetError("glued graph check failed", invariant=name)
    return checks


def build_glued_g(
    gadget: Optional[GadgetH] = None, pairs: Optional[Sequence[Pair]] = None, *, check: bool = True
) -> GluedG:
    gadget = gadget or build_gadget_h()
    pairs = tuple(ALL_PAIRS if pairs is None else pairs)
    edges: List[Tuple[Vertex, Vertex]] = [TERMINALS]
    lists: Dict[Vertex, frozenset] = {t: frozenset(TERMINAL_COLOURS) for t in TERMINALS}
    vertices: List[Vertex] = list(TERMINALS)
    for index, pair in enumerate(pairs, start=1):
        vertices.extend(copy_vertex(v, index) for v in gadget.inner)
        edges.extend((copy_vertex(a, index), copy_vertex(b, index)) for a, b in gadget.graph.edges)
        lists.update(_copy_lists(gadget, index, pair))
        if index > 1:
            edges.append((copy_vertex("v3", index - 1), copy_vertex("u3", index)))
    glued = GluedG(Graph.from_edges(vertices, edges), ListAssignment(lists), pairs, gadget)
    if check:
        check_glued(glued)
    log.info("glued graph: %d copies, %d vertices, %d edges", len(pairs), glued.graph.n, glued.graph.m)
    return glued


def _copy_instance(glued: GluedG, index: int, pair: Pair, bounds: Optional[Tuple[Colour, Colour]] = None):
    keep = glued.copy_vertices(index) + list(TERMINALS)
    sub = glued.graph.subgraph(keep)
    lists = dict(glued.lists.restrict(keep).lists)
    lists["x"], lists["y"] = frozenset([pair[0]]), frozenset([pair[1]])
    if bounds is not None:
        lists[copy_vertex("u3", index)] = frozenset([bounds[0]])
        lists[copy_vertex("v3", index)] = frozenset([bounds[1]])
    return sub, ListAssignment(lists)


def _refute(args: Tuple[GluedG, int, Pair]) -> bool:
    glued, index, pair = args
    sub, lists = _copy_instance(glued, index, pair)
    return solve_list_colouring(sub, lists) is None


@dataclass
class RefutationReport:
    rows: List[Dict[str, object]] = field(default_factory=list)
    uncovered: List[Pair] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.uncovered and all(row["blocked"] for row in self.rows)

    @property
    def extendable(self) -> List[Pair]:
        return [tuple(row["pair"]) for row in self.rows if not row["blocked"]]  # type: ignore[misc]

    def to_dict(self) -> Dict[str, object]:
        return {
            "ok": self.ok,
            "pairs_checked": len(self.rows),
            "uncovered": [list(p) for p in self.uncovered],
            "rows": self.rows,
        }


def verify_not_7_truncated_choosable(glued: GluedG, *, workers: int = 1) -> RefutationReport:
    """Each colouring of (x, y) fails to extend to the copy carrying that pair."""

    jobs = [(glued, index, pair) for index, pair in enumerate(glued.pairs, start=1)]
    if workers > 1:
        with Pool(processes=workers) as pool:
            blocked = pool.map(_refute, jobs)
    else:
        blocked = [_refute(job) for job in jobs]
    report = RefutationReport()
    for (_, index, pair), ok in zip(jobs, blocked):
        report.rows.append({"copy": index, "pair": list(pair), "blocked": ok})
    report.uncovered = [p for p in ALL_PAIRS if p not in set(glued.pairs)]
    log.info("refutation: %d/%d copies blocked, %d pairs uncovered", sum(blocked), len(jobs), len(report.uncovered))
    return report


def extend_pair(glued: GluedG, pair: Pair) -> Optional[Dict[Vertex, Colour]]:
    """An L-colouring of G with x, y coloured ``pair``, or None.

    Copies interact only through the chain edges, so each copy is reduced to
    its feasible (u3, v3) colour pairs and the chain is solved left to right.
    """

    if pair[0] == pair[1]:
        return None
    options: List[Dict[Tuple[Colour, Colour], Dict[Vertex, Colour]]] = []
    for index in range(1, glued.copies + 1):
        feasible: Dict[Tuple[Colour, Colour], Dict[Vertex, Colour]] = {}
        for cu in sorted(glued.lists[copy_vertex("u3", index)] - set(pair), key=str):
            for cv in sorted(glued.lists[copy_vertex("v3", index)] - set(pair), key=str):
                sub, lists = _copy_instance(glued, index, pair, (cu, cv))
                colouring = solve_list_colouring(sub, lists)
                if colouring is not None:
                    feasible[(cu, cv)] = colouring
        if not feasible:
            return None
        options.append(feasible)

    reachable: List[Dict[Tuple[Colour, Colour], Optional[Tuple[Colour, Colour]]]] = [{b: None for b in options[0]}]
    for feasible in options[1:]:
        step: Dict[Tuple[Colour, Colour], Optional[Tuple[Colour, Colour]]] = {}
        for bound in feasible:
            back = next((prev for prev in reachable[-1] if prev[1] != bound[0]), None)
            if back is not None:
                step[bound] = back
        if not step:
            return None
        reachable.append(step)
    colouring: Dict[Vertex, Colour] = {}
    bound: Optional[Tuple[Colour, Colour]] = next(iter(reachable[-1]))
    for index in range(len(options), 0, -1):
        assert bound is not None
        colouring.update(options[index - 1][bound])
        bound = reachable[index - 1][bound]
    return colouring


def ablation(drop: int = 0, gadget: Optional[GadgetH] = None) -> Dict[str, object]:
    """Remove the copy at position ``drop``; the pair it carried becomes extendable."""

    pairs = list(ALL_PAIRS)
    missing = pairs.pop(drop)
    glued = build_glued_g(gadget, pairs, check=False)
    report = verify_not_7_truncated_choosable(glued)
    colouring = extend_pair(glued, missing)
    proper = colouring is not None and all(colouring[a] != colouring[b] for a, b in glued.graph.edges)
    return {
        "dropped": list(missing),
        "copies": glued.copies,
        "uncovered": [list(p) for p in report.uncovered],
        "extendable": colouring is not None,
        "proper": proper,
    }
