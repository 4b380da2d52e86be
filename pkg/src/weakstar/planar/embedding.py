from __future__ import annotations

"""Plane embeddings as rotation systems.

``rotation[v]`` lists the neighbours of v clockwise. A face is traced from a
dart (a, b) by continuing with (b, c) where c follows a in the rotation at b,
so the face holding dart (a, v) owns the corner at v between a and its
successor. An isolated vertex gets a face with no darts. Components are
placed side by side: their outer faces form one face of the whole drawing.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..graph.core import Graph, Vertex, edge_key, sort_vertices
from ..utils import get_logger

log = get_logger(__name__)

Dart = Tuple[Vertex, Vertex]


class EmbeddingError(ValueError):
    """Raised for inconsistent rotation systems or non-planar input."""


@dataclass(frozen=True)
class Face:
    darts: Tuple[Dart, ...]
    vertices: FrozenSet[Vertex]

    @property
    def size(self) -> int:
        return len(self.darts) if self.darts else 1


class PlaneEmbedding:
    def __init__(self, rotation: Mapping[Vertex, Sequence[Vertex]], outer: Optional[int] = None) -> None:
        self.rotation: Dict[Vertex, Tuple[Vertex, ...]] = {
            str(v): tuple(str(w) for w in rotation[v]) for v in sort_vertices(str(v) for v in rotation)
        }
        self._check_rotation()
        faces = self.faces
        if outer is None:
            outer = max(range(len(faces)), key=lambda i: (faces[i].size, -i))
        if not 0 <= outer < len(faces):
            raise EmbeddingError(f"outer face index {outer} out of range (0..{len(faces) - 1})")
        self.outer = outer

    def _check_rotation(self) -> None:
        for v, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"rotation at {v} repeats a neighbour")
            for w in nbrs:
                if w == v:
                    raise EmbeddingError(f"loop at {v}")
                if w not in self.rotation or v not in self.rotation[w]:
                    raise EmbeddingError(f"edge {v}-{w} is not listed at both ends")

    @classmethod
    def from_graph(cls, graph: Graph) -> "PlaneEmbedding":
        """Some plane embedding of ``graph`` (networkx planarity test)."""

        planar, certificate = nx.check_planarity(graph.to_networkx())
        if not planar:
            raise EmbeddingError("graph is not planar")
        rotation = {v: list(certificate.neighbors_cw_order(v)) for v in graph.vertices}
        return cls(rotation)

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.rotation)

    def successor(self, vertex: Vertex, neighbour: Vertex) -> Vertex:
        nbrs = self.rotation[vertex]
        return nbrs[(nbrs.index(neighbour) + 1) % len(nbrs)]

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        return tuple(compute_faces(self))

    @cached_property
    def dart_face(self) -> Dict[Dart, int]:
        found: Dict[Dart, int] = {}
        for index, face in enumerate(self.faces):
            for dart in face.darts:
                found[dart] = index
        return found

    def faces_at(self, vertex: Vertex) -> List[int]:
        """Faces incident to ``vertex``, one per corner, in rotation order."""

        if not self.rotation[vertex]:
            return [i for i, face in enumerate(self.faces) if not face.darts and vertex in face.vertices]
        return [self.dart_face[(w, vertex)] for w in self.rotation[vertex]]

    @property
    def outer_face(self) -> Face:
        return self.faces[self.outer]

    def restrict(self, keep: Iterable[Vertex]) -> "PlaneEmbedding":
        """Rotation system of the induced subgraph (cyclic orders preserved)."""

        keep_set = set(keep)
        rotation = {v: [w for w in self.rotation[v] if w in keep_set] for v in self.rotation if v in keep_set}
        return PlaneEmbedding(rotation)

    def with_chord(self, a: Vertex, b: Vertex, face: int) -> "PlaneEmbedding":
        """Add edge ab through ``face``; both ends must lie on it."""

        if b in self.rotation[a]:
            raise EmbeddingError(f"{a}-{b} is already an edge")
        darts = self.faces[face].darts
        into_a = next((d for d in darts if d[1] == a), None)
        into_b = next((d for d in darts if d[1] == b), None)
        if into_a is None or into_b is None:
            raise EmbeddingError(f"{a} and {b} do not share face {face}")
        rotation = {v: list(nbrs) for v, nbrs in self.rotation.items()}
        # the corner at a owned by the face sits right after into_a's tail
        rotation[a].insert(rotation[a].index(into_a[0]) + 1, b)
        rotation[b].insert(rotation[b].index(into_b[0]) + 1, a)
        chorded = PlaneEmbedding(rotation)
        outer = next((chorded.dart_face[d] for d in self.outer_face.darts if d in chorded.dart_face), chorded.outer)
        return PlaneEmbedding(rotation, outer)

    def face_pair_three_connected(self) -> bool:
        """Faces are cycles meeting in nothing, one vertex, or one common edge."""

        faces = [face for face in self.faces if face.darts]
        for face in faces:
            if len(face.vertices) != len(face.darts):
                return False
        edges_of = [frozenset(edge_key(a, b) for a, b in face.darts) for face in faces]
        for i in range(len(faces)):
            for j in range(i + 1, len(faces)):
                common = faces[i].vertices & faces[j].vertices
                if len(common) <= 1:
                    continue
                if len(common) > 2:
                    return False
                a, b = sorted(common)
                if edge_key(a, b) not in (edges_of[i] & edges_of[j]):
                    return False
        return True

    def to_json(self) -> Dict[str, object]:
        return {"rotation": {v: list(nbrs) for v, nbrs in self.rotation.items()}, "outer": self.outer}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "PlaneEmbedding":
        rotation = payload.get("rotation")
        if not isinstance(rotation, Mapping):
            raise EmbeddingError('embedding JSON must be {"rotation": {id: [neighbour, ...]}, "outer": index}')
        outer = payload.get("outer")
        return cls(rotation, int(outer) if outer is not None else None)  # type: ignore[arg-type]

    def __repr__(self) -> str:
        return f"PlaneEmbedding(n={len(self.rotation)}, faces={len(self.faces)}, outer={self.outer})"


def compute_faces(embedding: PlaneEmbedding) -> List[Face]:
    """Trace every face; each component must satisfy Euler's formula."""

    rotation = embedding.rotation
    seen: set = set()
    faces: List[Face] = []
    component_of: Dict[Vertex, int] = {}
    graph = Graph(rotation)
    for index, component in enumerate(graph.components()):
        for v in component:
            component_of[v] = index
    face_count = [0] * len(set(component_of.values()))
    for v in rotation:
        if not rotation[v]:
            faces.append(Face((), frozenset([v])))
            face_count[component_of[v]] += 1
            continue
        for w in rotation[v]:
            if (v, w) in seen:
                continue
            darts: List[Dart] = []
            dart = (v, w)
            while dart not in seen:
                seen.add(dart)
                darts.append(dart)
                a, b = dart
                nbrs = rotation[b]
                dart = (b, nbrs[(nbrs.index(a) + 1) % len(nbrs)])
            if dart != (v, w):
                raise EmbeddingError(f"face walk from {v}->{w} does not close")
            faces.append(Face(tuple(darts), frozenset(a for a, _ in darts)))
            face_count[component_of[v]] += 1
    for index, component in enumerate(graph.components()):
        sub = graph.subgraph(component)
        if sub.n - sub.m + face_count[index] != 2:
            raise EmbeddingError(
                f"rotation is not planar: component with n={sub.n}, m={sub.m} has {face_count[index]} faces"
            )
    return faces


def embedding_for(graph: Graph, embedding: Optional[PlaneEmbedding] = None) -> PlaneEmbedding:
    if embedding is None:
        return PlaneEmbedding.from_graph(graph)
    if embedding.graph != graph:
        raise EmbeddingError("embedding does not match the graph")
    return embedding
