from __future__ import annotations

"""Covers (L, M) and exact cover colouring."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

from ..graph.core import Graph, Vertex, sort_vertices
from .lists import ListAssignment

Node = str
Link = Tuple[Node, Node]


class CoverFormatError(ValueError):
    """Raised for malformed covers."""


def _link(a: Node, b: Node) -> Link:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Cover:
    nodes: Mapping[Vertex, Tuple[Node, ...]]
    links: FrozenSet[Link]

    @classmethod
    def build(cls, nodes: Mapping[Vertex, Sequence[Node]], links) -> "Cover":
        return cls({str(v): tuple(str(x) for x in ns) for v, ns in nodes.items()}, frozenset(_link(str(a), str(b)) for a, b in links))

    def owner(self) -> Dict[Node, Vertex]:
        found: Dict[Node, Vertex] = {}
        for vertex, nodes in self.nodes.items():
            for node in nodes:
                if node in found:
                    raise CoverFormatError(f"node {node!r} belongs to two vertices")
                found[node] = vertex
        return found

    def validate(self, graph: Graph) -> None:
        if set(self.nodes) != set(graph.vertices):
            raise CoverFormatError("cover vertex set differs from the graph")
        owner = self.owner()
        for a, b in self.links:
            if a not in owner or b not in owner:
                raise CoverFormatError(f"link {a}-{b} uses an unknown node")
            if not graph.has_edge(owner[a], owner[b]):
                raise CoverFormatError(f"link {a}-{b} does not follow an edge")

    def is_simple(self) -> bool:
        owner = self.owner()
        seen: Set[Tuple[Node, Vertex]] = set()
        for a, b in self.links:
            for node, other in ((a, owner[b]), (b, owner[a])):
                if (node, other) in seen:
                    return False
                seen.add((node, other))
        return True

    def adjacency(self) -> Dict[Node, Set[Node]]:
        adj: Dict[Node, Set[Node]] = {n: set() for ns in self.nodes.values() for n in ns}
        for a, b in self.links:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def sizes(self) -> Dict[Vertex, int]:
        return {v: len(ns) for v, ns in self.nodes.items()}

    def to_json(self) -> Dict[str, object]:
        return {
            "nodes": {v: list(self.nodes[v]) for v in sort_vertices(self.nodes)},
            "links": [list(link) for link in sorted(self.links)],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "Cover":
        nodes = payload.get("nodes")
        links = payload.get("links")
        if not isinstance(nodes, Mapping) or not isinstance(links, list):
            raise CoverFormatError('cover JSON must be {"nodes": {...}, "links": [[a, b]]}')
        return cls.build(nodes, links)  # type: ignore[arg-type]


def induced_cover(graph: Graph, lists: ListAssignment) -> Cover:
    """Nodes v:c for c in L(v); links join u:c and v:c along every edge uv."""

    lists.check(graph)
    nodes = {v: tuple(f"{v}:{c}" for c in sorted(lists[v], key=str)) for v in graph.vertices}
    links = []
    for u, v in graph.edges:
        for colour in lists[u] & lists[v]:
            links.append((f"{u}:{colour}", f"{v}:{colour}"))
    return Cover.build(nodes, links)


def solve_cover_colouring(
    graph: Graph,
    cover: Cover,
    *,
    subset: Optional[Sequence[Vertex]] = None,
    validate: bool = True,
) -> Optional[Dict[Vertex, Node]]:
    """One node per vertex (of ``subset``, default all) with no link between chosen nodes."""

    if validate:
        cover.validate(graph)
    adj = cover.adjacency()
    targets = list(graph.vertices if subset is None else subset)
    domains: Dict[Vertex, Set[Node]] = {v: set(cover.nodes[v]) for v in targets}
    if any(not d for d in domains.values()):
        return None
    owner = cover.owner()
    chosen: Dict[Vertex, Node] = {}

    def extend() -> bool:
        open_vertices = [v for v in targets if v not in chosen]
        if not open_vertices:
            return True
        vertex = min(open_vertices, key=lambda v: len(domains[v]))
        for node in sorted(domains[vertex]):
            pruned: List[Tuple[Vertex, Node]] = []
            dead = False
            for other_node in adj[node]:
                other = owner[other_node]
                if other in domains and other not in chosen and other_node in domains[other]:
                    domains[other].discard(other_node)
                    pruned.append((other, other_node))
                    if not domains[other]:
                        dead = True
            if not dead:
                chosen[vertex] = node
                if extend():
                    return True
                del chosen[vertex]
            for other, other_node in pruned:
                domains[other].add(other_node)
        return False

    return dict(chosen) if extend() else None


def is_cover_colouring(cover: Cover, colouring: Mapping[Vertex, Node]) -> bool:
    if any(colouring[v] not in cover.nodes[v] for v in colouring):
        return False
    picked = set(colouring.values())
    return not any(a in picked and b in picked for a, b in cover.links)
