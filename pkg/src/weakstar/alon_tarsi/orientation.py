from __future__ import annotations

"""Orientations and positive edge weightings."""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..graph.core import Edge, Graph, Vertex, edge_key, vertex_key

Arc = Tuple[Vertex, Vertex]


@dataclass(frozen=True)
class EdgeWeighting:
    weights: Mapping[Edge, int]

    def __post_init__(self) -> None:
        for edge, value in self.weights.items():
            if int(value) < 1:
                raise ValueError(f"edge weight of {edge} must be positive, got {value}")

    @classmethod
    def unit(cls, graph: Graph) -> "EdgeWeighting":
        return cls({edge: 1 for edge in graph.edges})

    def __getitem__(self, edge: Sequence[Vertex]) -> int:
        return int(self.weights[edge_key(edge[0], edge[1])])

    def is_unit(self) -> bool:
        return all(value == 1 for value in self.weights.values())

    def total(self) -> int:
        return sum(self.weights.values())

    def to_json(self, arcs: Optional[Sequence[Arc]] = None) -> Dict[str, Dict[str, int]]:
        """``{"w": {"tail-head": int}}``; without arcs the key uses the sorted edge."""

        keyed = list(arcs) if arcs is not None else list(self.weights)
        return {"w": {f"{a}-{b}": self[(a, b)] for a, b in keyed}}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "EdgeWeighting":
        raw = payload.get("w")
        if not isinstance(raw, Mapping):
            raise ValueError('weighting JSON must be {"w": {"tail-head": int}}')
        weights: Dict[Edge, int] = {}
        for key, value in raw.items():
            tail, sep, head = str(key).partition("-")
            if not sep:
                raise ValueError(f"weighting key {key!r} must be 'tail-head'")
            weights[edge_key(tail, head)] = int(value)  # type: ignore[call-overload]
        return cls(weights)


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: Tuple[Arc, ...]

    def __post_init__(self) -> None:
        seen = set()
        for tail, head in self.arcs:
            if not self.base.has_edge(tail, head):
                raise ValueError(f"arc {tail}->{head} is not an edge of the base graph")
            key = edge_key(tail, head)
            if key in seen:
                raise ValueError(f"edge {key} oriented twice")
            seen.add(key)
        if len(seen) != self.base.m:
            raise ValueError("every edge must be oriented exactly once")

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Sequence[Arc]) -> "Orientation":
        ordered = sorted(arcs, key=lambda a: (vertex_key(edge_key(*a)[0]), vertex_key(edge_key(*a)[1])))
        return cls(base, tuple(ordered))

    @classmethod
    def from_out_degrees(cls, base: Graph, out_degree: Mapping[Vertex, int]) -> Optional["Orientation"]:
        """Some orientation realising ``out_degree`` (backtracking), or None."""

        edges = list(base.edges)
        remaining = {v: int(out_degree.get(v, 0)) for v in base.vertices}
        left = {v: base.degree(v) for v in base.vertices}
        chosen: List[Arc] = []

        def place(index: int) -> bool:
            if index == len(edges):
                return all(value == 0 for value in remaining.values())
            a, b = edges[index]
            for tail, head in ((a, b), (b, a)):
                if remaining[tail] <= 0:
                    continue
                remaining[tail] -= 1
                left[a] -= 1
                left[b] -= 1
                if remaining[a] <= left[a] and remaining[b] <= left[b]:
                    chosen.append((tail, head))
                    if place(index + 1):
                        return True
                    chosen.pop()
                remaining[tail] += 1
                left[a] += 1
                left[b] += 1
            return False

        if sum(remaining.values()) != base.m or not place(0):
            return None
        return cls.from_arcs(base, chosen)

    def out_degree(self) -> Dict[Vertex, int]:
        degree = {v: 0 for v in self.base.vertices}
        for tail, _ in self.arcs:
            degree[tail] += 1
        return degree

    def weighted_out_degree(self, weights: EdgeWeighting) -> Dict[Vertex, int]:
        degree = {v: 0 for v in self.base.vertices}
        for arc in self.arcs:
            degree[arc[0]] += weights[arc]
        return degree

    def reversed(self) -> "Orientation":
        return Orientation.from_arcs(self.base, [(head, tail) for tail, head in self.arcs])

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def to_json(self) -> Dict[str, List[List[Vertex]]]:
        return {"arcs": [[tail, head] for tail, head in self.arcs]}

    @classmethod
    def from_json(cls, base: Graph, payload: Mapping[str, object]) -> "Orientation":
        raw = payload.get("arcs")
        if not isinstance(raw, list):
            raise ValueError('orientation JSON must be {"arcs": [[tail, head]]}')
        return cls.from_arcs(base, [(str(a), str(b)) for a, b in raw])


def all_orientations(graph: Graph) -> Iterator[Orientation]:
    edges = list(graph.edges)
    for mask in range(1 << len(edges)):
        arcs = [(b, a) if mask >> i & 1 else (a, b) for i, (a, b) in enumerate(edges)]
        yield Orientation(graph, tuple(arcs))
