from __future__ import annotations

"""Immutable simple graphs and per-vertex capacity maps."""

from collections.abc import Mapping
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

Vertex = str
Edge = Tuple[Vertex, Vertex]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (loops, parallel edges, unknown ids)."""


class CapMapError(ValueError):
    """Raised when a cap map does not match its graph or holds negative values."""


def vertex_key(vertex: Vertex) -> Tuple[int, int, str]:
    """Deterministic total order: numeric ids numerically, then the rest lexically."""

    if vertex.isdigit():
        return (0, int(vertex), vertex)
    return (1, 0, vertex)


def sort_vertices(vertices: Iterable[Vertex]) -> List[Vertex]:
    return sorted(vertices, key=vertex_key)


def edge_key(a: Vertex, b: Vertex) -> Edge:
    return (a, b) if vertex_key(a) <= vertex_key(b) else (b, a)


class Graph:
    """Finite simple undirected graph with string vertex ids.

    Instances are immutable; every modifier returns a new graph.
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_hash")

    def __init__(self, adjacency: Mapping[Vertex, Iterable[Vertex]]) -> None:
        adj: Dict[Vertex, FrozenSet[Vertex]] = {}
        for vertex, nbrs in adjacency.items():
            adj[str(vertex)] = frozenset(str(n) for n in nbrs)
        for vertex, nbrs in adj.items():
            if vertex in nbrs:
                raise GraphFormatError(f"loop at vertex {vertex!r}")
            for other in nbrs:
                if other not in adj:
                    raise GraphFormatError(f"edge {vertex!r}-{other!r} references an unknown vertex")
                if vertex not in adj[other]:
                    raise GraphFormatError(f"adjacency of {vertex!r} and {other!r} is not symmetric")
        self._vertices: Tuple[Vertex, ...] = tuple(sort_vertices(adj))
        self._adj: Mapping[Vertex, FrozenSet[Vertex]] = MappingProxyType(adj)
        self._edges: Optional[Tuple[Edge, ...]] = None
        self._hash: Optional[int] = None

    # construction -----------------------------------------------------------------
    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]]) -> "Graph":
        adj: Dict[Vertex, set] = {}
        for vertex in vertices:
            vertex = str(vertex)
            if vertex in adj:
                raise GraphFormatError(f"duplicate vertex id {vertex!r}")
            adj[vertex] = set()
        for raw in edges:
            if len(raw) != 2:
                raise GraphFormatError(f"edge {raw!r} must have exactly two endpoints")
            a, b = str(raw[0]), str(raw[1])
            if a == b:
                raise GraphFormatError(f"loop at vertex {a!r}")
            if a not in adj or b not in adj:
                raise GraphFormatError(f"edge {a!r}-{b!r} references an unknown vertex")
            if b in adj[a]:
                raise GraphFormatError(f"parallel edge {a!r}-{b!r}")
            adj[a].add(b)
            adj[b].add(a)
        return cls(adj)

    @classmethod
    def empty(cls) -> "Graph":
        return cls({})

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        if graph.is_directed() or graph.is_multigraph():
            raise GraphFormatError("only simple undirected graphs are supported")
        return cls.from_edges([str(v) for v in graph.nodes], [(str(a), str(b)) for a, b in graph.edges])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(self.edges)
        return graph

    # accessors --------------------------------------------------------------------
    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    @property
    def adjacency(self) -> Mapping[Vertex, FrozenSet[Vertex]]:
        return self._adj

    @property
    def edges(self) -> Tuple[Edge, ...]:
        if self._edges is None:
            found = set()
            for vertex, nbrs in self._adj.items():
                for other in nbrs:
                    found.add(edge_key(vertex, other))
            self._edges = tuple(sorted(found, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))))
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self, vertex: Vertex) -> FrozenSet[Vertex]:
        try:
            return self._adj[vertex]
        except KeyError as exc:
            raise KeyError(f"unknown vertex {vertex!r}") from exc

    def sorted_neighbours(self, vertex: Vertex) -> List[Vertex]:
        return sort_vertices(self.neighbours(vertex))

    def degree(self, vertex: Vertex) -> int:
        return len(self.neighbours(vertex))

    def degrees(self) -> Dict[Vertex, int]:
        return {v: len(self._adj[v]) for v in self._vertices}

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return a in self._adj and b in self._adj[a]

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    # derived graphs -----------------------------------------------------------------
    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        kept = set(keep)
        missing = kept - set(self._adj)
        if missing:
            raise KeyError(f"unknown vertices {sort_vertices(missing)!r}")
        return Graph({v: self._adj[v] & kept for v in kept})

    def remove_vertices(self, drop: Iterable[Vertex]) -> "Graph":
        dropped = set(drop)
        return self.subgraph(v for v in self._vertices if v not in dropped)

    def remove_edges(self, edges: Iterable[Sequence[Vertex]]) -> "Graph":
        adj = {v: set(n) for v, n in self._adj.items()}
        for a, b in edges:
            if b not in adj.get(a, ()):
                raise GraphFormatError(f"missing edge {a!r}-{b!r}")
            adj[a].discard(b)
            adj[b].discard(a)
        return Graph(adj)

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Graph":
        images = [mapping.get(v, v) for v in self._vertices]
        if len(set(images)) != len(images):
            raise GraphFormatError("relabelling must be injective")
        return Graph({mapping.get(v, v): [mapping.get(n, n) for n in self._adj[v]] for v in self._vertices})

    def disjoint_union(self, other: "Graph") -> "Graph":
        clash = set(self._adj) & set(other._adj)
        if clash:
            raise GraphFormatError(f"vertex ids overlap: {sort_vertices(clash)[:5]!r}")
        adj: Dict[Vertex, Iterable[Vertex]] = dict(self._adj)
        adj.update(other._adj)
        return Graph(adj)

    # structure ---------------------------------------------------------------------
    def components(self) -> List[Tuple[Vertex, ...]]:
        """Connected components, each sorted, ordered by their least vertex."""

        seen: set = set()
        result: List[Tuple[Vertex, ...]] = []
        for start in self._vertices:
            if start in seen:
                continue
            seen.add(start)
            stack = [start]
            comp = []
            while stack:
                vertex = stack.pop()
                comp.append(vertex)
                for other in self._adj[vertex]:
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
            result.append(tuple(sort_vertices(comp)))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_complete(self) -> bool:
        n = self.n
        return all(len(self._adj[v]) == n - 1 for v in self._vertices)

    def to_json(self) -> Dict[str, object]:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self.edges]}

    # dunder --------------------------------------------------------------------------
    def __contains__(self, vertex: object) -> bool:
        return vertex in self._adj

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class CapMap(Mapping):
    """Per-vertex nonnegative integer capacities."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Vertex, int]) -> None:
        cleaned: Dict[Vertex, int] = {}
        for vertex, value in values.items():
            if isinstance(value, bool) or int(value) != value:
                raise CapMapError(f"cap of {vertex!r} must be an integer, got {value!r}")
            if value < 0:
                raise CapMapError(f"cap of {vertex!r} must be nonnegative, got {value}")
            cleaned[str(vertex)] = int(value)
        self._values: Dict[Vertex, int] = cleaned

    # constructors ---------------------------------------------------------------------
    @classmethod
    def constant(cls, graph: Graph, k: int) -> "CapMap":
        return cls({v: k for v in graph.vertices})

    @classmethod
    def degree(cls, graph: Graph) -> "CapMap":
        return cls(graph.degrees())

    @classmethod
    def truncated(cls, graph: Graph, k: int) -> "CapMap":
        if k < 1:
            raise CapMapError(f"truncation level must be at least 1, got {k}")
        return cls({v: min(k, graph.degree(v)) for v in graph.vertices})

    @classmethod
    def for_graph(cls, graph: Graph, values: Mapping[Vertex, int]) -> "CapMap":
        caps = cls(values)
        caps.check_domain(graph)
        return caps

    # mapping protocol -------------------------------------------------------------------
    def __getitem__(self, vertex: Vertex) -> int:
        return self._values[vertex]

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CapMap):
            return self._values == other._values
        if isinstance(other, Mapping):
            return self._values == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def __repr__(self) -> str:
        items = ", ".join(f"{v}: {self._values[v]}" for v in sort_vertices(self._values))
        return f"CapMap({{{items}}})"

    # helpers -----------------------------------------------------------------------------
    def check_domain(self, graph: Graph) -> None:
        if set(self._values) != set(graph.vertices):
            missing = sort_vertices(set(graph.vertices) - set(self._values))
            extra = sort_vertices(set(self._values) - set(graph.vertices))
            raise CapMapError(f"cap domain mismatch (missing={missing[:5]}, extra={extra[:5]})")

    def as_dict(self) -> Dict[Vertex, int]:
        return dict(self._values)

    def restrict(self, keep: Iterable[Vertex]) -> "CapMap":
        return CapMap({v: self._values[v] for v in keep})

    def with_value(self, vertex: Vertex, value: int) -> "CapMap":
        values = dict(self._values)
        values[vertex] = value
        return CapMap(values)

    def le(self, other: Mapping[Vertex, int]) -> bool:
        """Pointwise ``self <= other`` over the common domain (domains must agree)."""

        if set(self._values) != set(other):
            raise CapMapError("pointwise comparison needs equal domains")
        return all(self._values[v] <= other[v] for v in self._values)

    def minus(self, other: Mapping[Vertex, int]) -> "CapMap":
        return CapMap({v: self._values[v] - other.get(v, 0) for v in self._values})

    def pointwise_min(self, other: Mapping[Vertex, int]) -> "CapMap":
        return CapMap({v: min(self._values[v], other[v]) for v in self._values})

    def total(self) -> int:
        return sum(self._values.values())

    def to_json(self) -> Dict[str, Dict[Vertex, int]]:
        return {"caps": {v: self._values[v] for v in sort_vertices(self._values)}}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "CapMap":
        raw = payload.get("caps", payload)
        if not isinstance(raw, Mapping):
            raise CapMapError("cap map JSON must be {\"caps\": {id: int}}")
        return cls({str(k): v for k, v in raw.items()})  # type: ignore[misc]
