from __future__ import annotations

"""Faces of an induced subgraph located through an ambient embedding.

Every region of the plane minus G[S] is a union of faces of the ambient
drawing: two ambient faces lie in the same region exactly when they are
joined across an ambient edge that is not an edge of G[S]. Regions are found
by union-find over ambient faces, which also merges the faces of different
components correctly (a face theta of G[S] is the intersection of the faces
theta_i of its components and V(theta) is the union of their boundaries).
Ambient components are drawn side by side, so their outer faces start merged.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..graph.core import Graph, Vertex, vertex_key
from .embedding import EmbeddingError, PlaneEmbedding


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class SubFace:
    """A face of G[S]: ``key`` is the least ambient face index it contains."""

    key: int
    members: FrozenSet[int]
    vertices: FrozenSet[Vertex]


class FaceSystem:
    def __init__(self, ambient: PlaneEmbedding, vertices: Optional[Iterable[Vertex]] = None) -> None:
        self.ambient = ambient
        self.vertex_set: FrozenSet[Vertex] = frozenset(ambient.rotation if vertices is None else vertices)
        unknown = self.vertex_set - set(ambient.rotation)
        if unknown:
            raise EmbeddingError(f"vertices {sorted(unknown)} are not in the embedding")
        faces = ambient.faces
        uf = _UnionFind(len(faces))
        for outer in self._component_outers():
            uf.union(outer, ambient.outer)
        for v, nbrs in ambient.rotation.items():
            for w in nbrs:
                if v < w and not (v in self.vertex_set and w in self.vertex_set):
                    uf.union(ambient.dart_face[(v, w)], ambient.dart_face[(w, v)])
        groups: Dict[int, Set[int]] = {}
        for index in range(len(faces)):
            groups.setdefault(uf.find(index), set()).add(index)
        self._class_of: Dict[int, int] = {}
        built: List[SubFace] = []
        for members in groups.values():
            key = min(members)
            boundary = frozenset(v for i in members for v in faces[i].vertices if v in self.vertex_set)
            built.append(SubFace(key, frozenset(members), boundary))
            for i in members:
                self._class_of[i] = key
        built.sort(key=lambda f: f.key)
        self.faces: Tuple[SubFace, ...] = tuple(built)
        self._by_key = {f.key: f for f in built}
        self.outer_key = self._class_of[ambient.outer]

    def _component_outers(self) -> List[int]:
        """Outer face of every ambient component: the designated one, else the largest."""

        ambient = self.ambient
        outers: List[int] = []
        for component in ambient.graph.components():
            members = set(component)
            indices = [i for i, face in enumerate(ambient.faces) if face.vertices & members]
            if ambient.outer in indices:
                outers.append(ambient.outer)
            else:
                outers.append(max(indices, key=lambda i: (ambient.faces[i].size, -i)))
        return outers

    @cached_property
    def graph(self) -> Graph:
        return self.ambient.graph.subgraph(self.vertex_set)

    def face(self, key: int) -> SubFace:
        return self._by_key[key]

    @property
    def outer(self) -> SubFace:
        return self._by_key[self.outer_key]

    def finite_faces(self) -> List[SubFace]:
        return [f for f in self.faces if f.key != self.outer_key]

    def class_of(self, ambient_face: int) -> int:
        return self._class_of[ambient_face]

    def region_of(self, vertex: Vertex) -> int:
        """Face of G[S] containing a vertex outside S."""

        if vertex in self.vertex_set:
            raise EmbeddingError(f"{vertex} is a vertex of the subgraph, not inside a face")
        return self._class_of[self.ambient.faces_at(vertex)[0]]

    def faces_at(self, vertex: Vertex) -> List[int]:
        seen: List[int] = []
        for index in self.ambient.faces_at(vertex):
            key = self._class_of[index]
            if key not in seen:
                seen.append(key)
        return seen

    def corner_face(self, vertex: Vertex, neighbour: Vertex) -> int:
        """Face owning the corner at ``vertex`` that follows the edge to ``neighbour``."""

        return self._class_of[self.ambient.dart_face[(neighbour, vertex)]]

    def rotation(self, vertex: Vertex) -> List[Vertex]:
        return [w for w in self.ambient.rotation[vertex] if w in self.vertex_set]

    def incidence(self) -> "IncidenceGraph":
        edges = frozenset((v, f.key) for f in self.faces for v in f.vertices)
        return IncidenceGraph(self.vertex_set, tuple(f.key for f in self.faces), edges, self.outer_key)

    def lift(self, vertex: Vertex, coarse_members: FrozenSet[int], within: Optional[FrozenSet[int]] = None) -> int:
        """The face of this system inside ``coarse_members`` (and ``within``) that ``vertex`` bounds."""

        candidates = [
            f.key
            for f in self.faces
            if vertex in f.vertices and f.members <= coarse_members and (within is None or f.members <= within)
        ]
        if len(candidates) != 1:
            raise EmbeddingError(f"face lift at {vertex} is ambiguous: {len(candidates)} candidates")
        return candidates[0]


@dataclass(frozen=True)
class IncidenceGraph:
    """H(G): graph vertices against face keys, v ~ theta iff v lies on theta."""

    vertices: FrozenSet[Vertex]
    faces: Tuple[int, ...]
    edges: FrozenSet[Tuple[Vertex, int]]
    outer: int

    def degree_of_vertex(self, vertex: Vertex) -> int:
        return sum(1 for v, _ in self.edges if v == vertex)

    def degree_of_face(self, face: int) -> int:
        return sum(1 for _, f in self.edges if f == face)

    def to_json(self) -> Dict[str, object]:
        return {
            "faces": list(self.faces),
            "outer": self.outer,
            "edges": [[v, f] for v, f in sorted(self.edges, key=lambda e: (e[1], vertex_key(e[0])))],
        }


def incidence_graph(embedding: PlaneEmbedding) -> IncidenceGraph:
    return FaceSystem(embedding).incidence()
