from __future__ import annotations

"""List assignments and exact list colouring by backtracking."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Mapping, Optional

from ..graph.core import Graph, Vertex, sort_vertices

Colour = Hashable


class ListAssignmentError(ValueError):
    """Raised when a list assignment does not cover its graph."""


@dataclass(frozen=True)
class ListAssignment:
    lists: Mapping[Vertex, FrozenSet[Colour]]

    @classmethod
    def of(cls, lists: Mapping[Vertex, object]) -> "ListAssignment":
        return cls({str(v): frozenset(colours) for v, colours in lists.items()})  # type: ignore[call-overload]

    def __getitem__(self, vertex: Vertex) -> FrozenSet[Colour]:
        return self.lists[vertex]

    def check(self, graph: Graph) -> None:
        if set(self.lists) != set(graph.vertices):
            raise ListAssignmentError("list assignment domain differs from the vertex set")

    def sizes(self) -> Dict[Vertex, int]:
        return {v: len(c) for v, c in self.lists.items()}

    def is_f_assignment(self, caps: Mapping[Vertex, int]) -> bool:
        return all(len(self.lists[v]) == caps[v] for v in self.lists)

    def restrict(self, keep) -> "ListAssignment":
        return ListAssignment({v: self.lists[v] for v in keep})

    def colours(self) -> FrozenSet[Colour]:
        found: set = set()
        for colours in self.lists.values():
            found |= colours
        return frozenset(found)

    def to_json(self) -> Dict[str, Dict[Vertex, List[Colour]]]:
        return {"lists": {v: sorted(self.lists[v], key=str) for v in sort_vertices(self.lists)}}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "ListAssignment":
        raw = payload.get("lists")
        if not isinstance(raw, Mapping):
            raise ListAssignmentError('list assignment JSON must be {"lists": {id: [token]}}')
        return cls.of({str(v): [c if isinstance(c, (int, str)) else str(c) for c in cs] for v, cs in raw.items()})


def solve_list_colouring(graph: Graph, lists: ListAssignment) -> Optional[Dict[Vertex, Colour]]:
    """Proper L-colouring or None; most-constrained vertex first with forward checking."""

    lists.check(graph)
    domains: Dict[Vertex, set] = {v: set(lists[v]) for v in graph.vertices}
    colouring: Dict[Vertex, Colour] = {}

    def choose() -> Optional[Vertex]:
        best = None
        for v in graph.vertices:
            if v in colouring:
                continue
            if best is None or len(domains[v]) < len(domains[best]):
                best = v
        return best

    def extend() -> bool:
        vertex = choose()
        if vertex is None:
            return True
        for colour in sorted(domains[vertex], key=str):
            pruned: List[Vertex] = []
            dead = False
            for other in graph.neighbours(vertex):
                if other not in colouring and colour in domains[other]:
                    domains[other].discard(colour)
                    pruned.append(other)
                    if not domains[other]:
                        dead = True
            if not dead:
                colouring[vertex] = colour
                if extend():
                    return True
                del colouring[vertex]
            for other in pruned:
                domains[other].add(colour)
        return False

    if any(not d for d in domains.values()):
        return None
    return dict(colouring) if extend() else None


def is_proper_list_colouring(graph: Graph, lists: ListAssignment, colouring: Mapping[Vertex, Colour]) -> bool:
    if set(colouring) != set(graph.vertices):
        return False
    if any(colouring[v] not in lists[v] for v in graph.vertices):
        return False
    return all(colouring[a] != colouring[b] for a, b in graph.edges)
