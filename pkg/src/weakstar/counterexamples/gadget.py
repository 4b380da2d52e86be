from __future__ import annotations

"""The 28-vertex gadget H with terminals x, y and its blocking list assignment.

The edge set is stored as data and re-validated on every load against the
structure the non-colourability argument relies on; nothing is patched.
"""

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from ..config import PATHS
from ..graph.core import Graph, Vertex
from ..graph.io import graph_from_json
from ..oracles.lists import Colour, ListAssignment, solve_list_colouring
from ..utils import get_logger, jsonio

log = get_logger(__name__)

GADGET_FILE = "gadget_h.json"
GADGET_ORDER = 28
TERMINALS: Tuple[Vertex, Vertex] = ("x", "y")
NUMERIC_COLOURS = ("1", "2", "3", "4", "5")

_MIRROR: Dict[Vertex, Vertex] = {
    **{f"u{i}": f"v{i}" for i in (1, 2, 3)},
    **{f"v{i}": f"u{i}" for i in (1, 2, 3)},
    **{f"s{i}": f"t{i}" for i in range(1, 9)},
    **{f"t{i}": f"s{i}" for i in range(1, 9)},
}


class GadgetError(ValueError):
    def __init__(self, message: str, *, invariant: str) -> None:
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class GadgetH:
    graph: Graph
    lists: ListAssignment
    notes: Tuple[str, ...] = ()

    @property
    def inner(self) -> List[Vertex]:
        return [v for v in self.graph.vertices if v not in TERMINALS]

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"terminals": list(TERMINALS), **self.graph.to_json(), **self.lists.to_json()}
        payload["notes"] = list(self.notes)
        return payload


def iter_list_colourings(graph: Graph, lists: Mapping[Vertex, object]) -> Iterator[Dict[Vertex, Colour]]:
    """Every proper colouring from ``lists``; for the small sub-instances only."""

    order = list(graph.vertices)
    pools = [sorted(lists[v], key=str) for v in order]  # type: ignore[call-overload]
    for choice in product(*pools):
        colouring = dict(zip(order, choice))
        if all(colouring[a] != colouring[b] for a, b in graph.edges):
            yield colouring


def _induces_clique(graph: Graph, vertices: List[Vertex]) -> bool:
    sub = graph.subgraph(vertices)
    return sub.m == len(vertices) * (len(vertices) - 1) // 2


def _fail(message: str, invariant: str) -> None:
    raise GadgetError(message, invariant=invariant)


def _check_structure(graph: Graph, lists: ListAssignment) -> None:
    if graph.n != GADGET_ORDER:
        _fail(f"expected {GADGET_ORDER} vertices, found {graph.n}", "order")
    lists.check(graph)
    if not _induces_clique(graph, ["u1", "v1", "w3", "w4"]):
        _fail("{u1, v1, w3, w4} does not induce K_4", "k4")
    for side, hub in (("s", "u"), ("t", "v")):
        for first, centre in ((1, 1), (3, 1), (5, 2), (7, 2)):
            triangle = [f"{side}{first}", f"{side}{first + 1}", f"{hub}{centre}"]
            if not _induces_clique(graph, triangle):
                _fail(f"{triangle} does not induce a triangle", "triangle")
    mirror = {v: _MIRROR.get(v, v) for v in graph.vertices}
    if graph.relabel(mirror) != graph:
        _fail("swapping the u/s side with the v/t side is not an automorphism", "symmetry")
    if any(lists[mirror[v]] != lists[v] for v in graph.vertices):
        _fail("the side swap does not preserve lists", "symmetry")
    for v in graph.vertices:
        if v in TERMINALS:
            continue
        size = len(lists[v])
        if size < 7 and graph.degree(v) != size:
            _fail(f"{v} has degree {graph.degree(v)} but a list of {size}", "list-size")
        if size == 7 and graph.degree(v) < 7:
            _fail(f"{v} has degree {graph.degree(v)} below 7", "list-size")
        for colour, terminal in (("a", "x"), ("b", "y")):
            if (colour in lists[v]) != graph.has_edge(v, terminal):
                _fail(f"{v}: colour {colour} in its list iff adjacent to {terminal}", "terminal-colours")
    planar, _ = nx.check_planarity(graph.to_networkx())
    if not planar:
        _fail("H is not planar", "planar")


def claim_u1_or_v1(graph: Graph) -> bool:
    """Every colouring of H[u1, v1, w1..w4] from the reduced lists puts 1 or 2 on u1 or v1."""

    part = graph.subgraph(["u1", "v1", "w1", "w2", "w3", "w4"])
    reduced = {"u1": NUMERIC_COLOURS, "v1": NUMERIC_COLOURS, "w1": "123", "w2": "123", "w3": "345", "w4": "345"}
    return all(
        c["u1"] in ("1", "2") or c["v1"] in ("1", "2") for c in iter_list_colourings(part, reduced)
    )


def claim_u2_forced(graph: Graph) -> bool:
    """With u1 in {1, 2}, every colouring of H[u1, u2, s1..s4] gives u2 the colour 5."""

    part = graph.subgraph(["u1", "u2", "s1", "s2", "s3", "s4"])
    reduced = {"u1": "12", "u2": NUMERIC_COLOURS, "s1": "123", "s2": "123", "s3": "124", "s4": "124"}
    found = list(iter_list_colourings(part, reduced))
    return bool(found) and all(c["u2"] == "5" for c in found)


def claim_u3_blocked(graph: Graph) -> bool:
    """With u2 coloured 5, H[u2, u3, s5..s8] has no colouring: u3 sees all its colours."""

    part = graph.subgraph(["u2", "u3", "s5", "s6", "s7", "s8"])
    reduced = {"u2": "5", "u3": NUMERIC_COLOURS, "s5": "125", "s6": "125", "s7": "345", "s8": "345"}
    return next(iter_list_colourings(part, reduced), None) is None


def validate_gadget(gadget: GadgetH) -> Dict[str, bool]:
    """Raise GadgetError on the first broken invariant; returns the passed checks."""

    _check_structure(gadget.graph, gadget.lists)
    checks = {
        "u1-or-v1": claim_u1_or_v1(gadget.graph),
        "u2-forced": claim_u2_forced(gadget.graph),
        "u3-blocked": claim_u3_blocked(gadget.graph),
        "not-colourable": solve_list_colouring(gadget.graph, gadget.lists) is None,
    }
    for name, ok in checks.items():
        if not ok:
            _fail("sub-instance check failed", name)
    return checks


def load_gadget(path: Optional[Path] = None) -> GadgetH:
    source = path or PATHS.gadgets_dir / GADGET_FILE
    payload = jsonio.read_json(source)
    graph = graph_from_json(payload)
    lists = ListAssignment.from_json(payload)
    return GadgetH(graph, lists, tuple(payload.get("notes", ())))


def build_gadget_h(path: Optional[Path] = None) -> GadgetH:
    gadget = load_gadget(path)
    validate_gadget(gadget)
    log.debug("gadget H validated: %d vertices, %d edges", gadget.graph.n, gadget.graph.m)
    return gadget
