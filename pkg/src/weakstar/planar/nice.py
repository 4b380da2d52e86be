from __future__ import annotations

"""Nice subgraphs of the vertex-face incidence graph H(G).

A spanning subgraph H of H(G) is nice with respect to (outer face, v*) when
every graph vertex has at most two faces in H, the outer face keeps all its
vertices, v* keeps only the outer face, and every finite face loses at most
two vertices; two lost vertices must lie on an induced cycle inside V(theta)
that encloses theta.

The construction recurses on the number of vertices: components, a single
vertex, a cut vertex, a cycle, an ear of an outerplane block, and otherwise
an interior vertex u whose removal merges its faces into one face theta_u.
When the boundary of theta_u is not a cycle, its vertices are re-attached to
the faces around u by a max flow.
Every result is re-checked by ``check_nice``.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from ..calculus.degree import ConstructionFailure
from ..graph.core import Vertex, sort_vertices, vertex_key
from ..utils import get_logger
from .embedding import EmbeddingError, PlaneEmbedding
from .faces import FaceSystem, SubFace

log = get_logger(__name__)

HEdge = Tuple[Vertex, int]


class NiceSubgraphError(ConstructionFailure):
    def __init__(self, message: str, *, invariant: str = "nice-subgraph", details: Optional[Dict[str, object]] = None) -> None:
        super().__init__(message, invariant=invariant, details=details)


@dataclass(frozen=True)
class NiceSubgraph:
    system: FaceSystem
    edges: FrozenSet[HEdge]
    anchor: Vertex

    def faces_of(self, vertex: Vertex) -> List[int]:
        return sorted(f for v, f in self.edges if v == vertex)

    def vertices_of(self, face: int) -> FrozenSet[Vertex]:
        return frozenset(v for v, f in self.edges if f == face)

    def has(self, vertex: Vertex, face: int) -> bool:
        return (vertex, face) in self.edges

    def to_json(self) -> Dict[str, object]:
        return {
            "anchor": self.anchor,
            "outer": self.system.outer_key,
            "edges": [[v, f] for v, f in sorted(self.edges, key=lambda e: (e[1], vertex_key(e[0])))],
        }


def _encloses(ambient: PlaneEmbedding, cycle: List[Vertex], members: FrozenSet[int]) -> bool:
    system = FaceSystem(ambient, cycle)
    return all(system.class_of(i) != system.outer_key for i in members)


def _loss_ok(system: FaceSystem, face: SubFace, missing: List[Vertex]) -> bool:
    """At most two lost vertices; a lost pair lies on an induced cycle of V(face) enclosing it."""

    if len(missing) > 2:
        return False
    if len(missing) < 2:
        return True
    a, b = missing
    inner = system.graph.subgraph(face.vertices).to_networkx()
    return any(a in cycle and b in cycle and _encloses(system.ambient, cycle, face.members) for cycle in nx.chordless_cycles(inner))


def check_nice(nice: NiceSubgraph) -> None:
    """Raise NiceSubgraphError naming the first violated condition."""

    system = nice.system
    full = system.incidence()
    edges = nice.edges
    if not edges <= full.edges:
        raise NiceSubgraphError("H is not a subgraph of H(G)", invariant="subgraph")
    for v in system.vertex_set:
        if sum(1 for w, _ in edges if w == v) > 2:
            raise NiceSubgraphError(f"vertex {v} has more than two faces", invariant="vertex-degree", details={"vertex": v})
    outer = system.outer
    if nice.anchor not in outer.vertices:
        raise NiceSubgraphError(f"anchor {nice.anchor} is not on the outer face", invariant="anchor")
    if any((v, outer.key) not in edges for v in outer.vertices):
        raise NiceSubgraphError("outer face lost a vertex", invariant="outer-face")
    if [f for v, f in edges if v == nice.anchor] != [outer.key]:
        raise NiceSubgraphError(f"anchor {nice.anchor} must keep exactly the outer face", invariant="anchor")
    for face in system.finite_faces():
        missing = sort_vertices(v for v in face.vertices if (v, face.key) not in edges)
        if len(missing) > 2:
            raise NiceSubgraphError(
                f"face {face.key} lost {len(missing)} vertices", invariant="face-degree", details={"face": face.key, "missing": missing}
            )
        if not _loss_ok(system, face, missing):
            a, b = missing
            raise NiceSubgraphError(
                f"face {face.key}: {a} and {b} are not on an enclosing induced cycle",
                invariant="face-cycle",
                details={"face": face.key, "missing": missing},
            )


class _Builder:
    def __init__(self, ambient: PlaneEmbedding) -> None:
        self.ambient = ambient

    def build(self, vertices: FrozenSet[Vertex], anchor: Vertex) -> Tuple[FaceSystem, Set[HEdge]]:
        system = FaceSystem(self.ambient, vertices)
        if anchor not in system.outer.vertices:
            raise NiceSubgraphError(f"{anchor} is not on the outer face", invariant="anchor")
        graph = system.graph
        components = graph.components()
        if len(components) > 1:
            return system, self._disconnected(system, components, anchor)
        if graph.n <= 2:
            return system, set(system.incidence().edges)
        nxg = graph.to_networkx()
        cuts = sorted(nx.articulation_points(nxg), key=vertex_key)
        if cuts:
            return system, self._cut_vertex(system, cuts[0], anchor)
        if graph.m == graph.n:
            inner = system.finite_faces()[0]
            return system, set(system.incidence().edges) - {(anchor, inner.key)}
        if system.outer.vertices == system.vertex_set:
            return system, self._ear(system, anchor)
        return system, self._interior(system, anchor)

    def _disconnected(self, system: FaceSystem, components, anchor: Vertex) -> Set[HEdge]:
        edges: Set[HEdge] = set()
        for component in components:
            part = frozenset(component)
            if anchor in part:
                local_anchor = anchor
            else:
                local_anchor = sort_vertices(FaceSystem(self.ambient, part).outer.vertices)[0]
            sub, sub_edges = self.build(part, local_anchor)
            others = FaceSystem(self.ambient, system.vertex_set - part)
            within = others.face(others.region_of(sort_vertices(part)[0])).members
            for v, key in sub_edges:
                edges.add((v, system.lift(v, sub.face(key).members, within)))
        return edges

    def _cut_vertex(self, system: FaceSystem, cut: Vertex, anchor: Vertex) -> Set[HEdge]:
        graph = system.graph
        sides = [frozenset(c) for c in graph.remove_vertices([cut]).components()]
        chosen: Optional[FrozenSet[Vertex]] = None
        for side in sides:
            if anchor in side:
                continue
            block = FaceSystem(self.ambient, side | {cut})
            rest = system.vertex_set - side - {cut}
            if all(block.region_of(v) == block.outer_key for v in rest):
                chosen = side
                break
        if chosen is None:
            raise NiceSubgraphError(f"no side of cut vertex {cut} has the rest in its outer face", invariant="cut-vertex")
        second = chosen | {cut}
        first = system.vertex_set - chosen
        sys1, edges1 = self.build(first, anchor)
        sys2, edges2 = self.build(second, cut)
        outer2 = sys2.outer
        around_second = sys1.face(sys1.region_of(sort_vertices(chosen)[0])).members
        edges: Set[HEdge] = set()
        for v, key in edges1:
            edges.add((v, system.lift(v, sys1.face(key).members, outer2.members)))
        for v, key in edges2:
            if v == cut and key == outer2.key:
                continue
            edges.add((v, system.lift(v, sys2.face(key).members, around_second)))
        return edges

    def _ear(self, system: FaceSystem, anchor: Vertex) -> Set[HEdge]:
        graph = system.graph
        for face in system.finite_faces():
            thin = frozenset(v for v in face.vertices if graph.degree(v) == 2)
            ends = sort_vertices(face.vertices - thin)
            if not thin or len(ends) != 2 or anchor in thin or not graph.has_edge(*ends):
                continue
            rest = system.vertex_set - thin
            sub, sub_edges = self.build(rest, anchor)
            edges: Set[HEdge] = set()
            for v, key in sub_edges:
                if key == sub.outer_key:
                    continue
                edges.add((v, system.lift(v, sub.face(key).members)))
            edges |= {(v, system.outer_key) for v in system.vertex_set}
            edges |= {(v, face.key) for v in thin}
            return edges
        raise NiceSubgraphError("outerplane block without an ear avoiding the anchor", invariant="ear")

    def _interior(self, system: FaceSystem, anchor: Vertex) -> Set[HEdge]:
        u = self._interior_vertex(system)
        rest = system.vertex_set - {u}
        sub, sub_edges = self.build(rest, anchor)
        theta_u = sub.region_of(u)
        ring = system.rotation(u)
        theta = [system.corner_face(u, w) for w in ring]
        edges: Set[HEdge] = set()
        for v, key in sub_edges:
            if key == theta_u:
                continue
            edges.add((v, system.lift(v, sub.face(key).members)))
        kept = {v for v, key in sub_edges if key == theta_u}
        split = _split_along_paths(system, u, ring, theta, kept, sub.face(theta_u).vertices)
        if split is None or not _split_ok(system, theta, edges | split):
            log.debug("interior vertex %s: boundary of its face is not a simple cycle, assigning by flow", u)
            split = _split_by_flow(system, u, theta, edges, anchor)
        return edges | split

    def _interior_vertex(self, system: FaceSystem) -> Vertex:
        """Least interior vertex whose removal keeps the graph 2-connected, else the least one."""

        candidates = sort_vertices(system.vertex_set - system.outer.vertices)
        nxg = system.graph.to_networkx()
        for u in candidates:
            rest = nxg.copy()
            rest.remove_node(u)
            if nx.is_biconnected(rest):
                return u
        return candidates[0]


def _split_along_paths(
    system: FaceSystem,
    u: Vertex,
    ring: List[Vertex],
    theta: List[int],
    kept: Set[Vertex],
    boundary: FrozenSet[Vertex],
) -> Optional[Set[HEdge]]:
    """Faces theta_t around u take the vertices of P_t - {u_t}; u takes the faces that lost z1, z2.

    None when the boundary of the merged face is not covered by that rule.
    """

    k = len(ring)

    def path_index(z: Vertex) -> Optional[int]:
        for t in range(k):
            if z in system.face(theta[t]).vertices and z != ring[t]:
                return t
        return None

    missing = sort_vertices(boundary - kept)
    if len(missing) > 2:
        return None
    slots = [path_index(z) for z in missing]
    assigned = {v: path_index(v) for v in kept}
    if None in slots or None in assigned.values():
        return None
    if len(slots) == 2 and slots[0] == slots[1]:
        i = slots[0]
        if ring[i] in assigned:
            assigned[ring[i]] = i
        u_faces = {theta[i], theta[(i - 1) % k]}
    else:
        i = slots[0] if slots else 0
        j = slots[1] if len(slots) == 2 else (i + 1) % k
        u_faces = {theta[i], theta[j]}
    split = {(v, theta[t]) for v, t in assigned.items()}
    return split | {(u, key) for key in u_faces}


def _split_ok(system: FaceSystem, theta: List[int], edges: Set[HEdge]) -> bool:
    load: Dict[Vertex, int] = {}
    for v, _ in edges:
        load[v] = load.get(v, 0) + 1
    if any(count > 2 for count in load.values()):
        return False
    for key in theta:
        face = system.face(key)
        if not _loss_ok(system, face, sort_vertices(v for v in face.vertices if (v, key) not in edges)):
            return False
    return True


def _split_by_flow(system: FaceSystem, u: Vertex, theta: List[int], edges: Set[HEdge], anchor: Vertex) -> Set[HEdge]:
    """Re-attach the boundary of theta_u by a max flow: vertices offer spare incidences, faces demand all but two."""

    load: Dict[Vertex, int] = {}
    for v, _ in edges:
        load[v] = load.get(v, 0) + 1
    faces = [system.face(key) for key in theta]
    strict: Set[int] = set()
    while True:
        network = nx.DiGraph()
        network.add_nodes_from(("source", "sink"))
        demand = 0
        for t, face in enumerate(faces):
            need = max(0, len(face.vertices) - (1 if t in strict else 2))
            network.add_edge(("face", t), "sink", capacity=need)
            demand += need
            for v in sort_vertices(face.vertices):
                spare = 0 if v == anchor else 2 - load.get(v, 0)
                if spare > 0:
                    network.add_edge("source", ("vertex", v), capacity=spare)
                    network.add_edge(("vertex", v), ("face", t), capacity=1)
        value, routed = nx.maximum_flow(network, "source", "sink")
        if value < demand:
            raise NiceSubgraphError(
                f"faces around {u} cannot keep enough vertices", invariant="interior-z", details={"vertex": u, "demand": demand, "routed": value}
            )
        split: Set[HEdge] = set()
        used: Dict[Vertex, int] = {}
        for t, face in enumerate(faces):
            for v in sort_vertices(face.vertices):
                if routed.get(("vertex", v), {}).get(("face", t), 0) > 0:
                    split.add((v, theta[t]))
                    used[v] = used.get(v, 0) + 1
        for t, face in enumerate(faces):
            for v in sort_vertices(face.vertices):
                if (v, theta[t]) in split or v == anchor:
                    continue
                if load.get(v, 0) + used.get(v, 0) < 2:
                    split.add((v, theta[t]))
                    used[v] = used.get(v, 0) + 1
        bad = {
            t
            for t, face in enumerate(faces)
            if not _loss_ok(system, face, sort_vertices(v for v in face.vertices if (v, theta[t]) not in split))
        }
        if not bad:
            return split
        if bad <= strict:
            raise NiceSubgraphError(f"faces around {u} lose vertices off every enclosing cycle", invariant="face-cycle", details={"vertex": u})
        strict |= bad


def nice_subgraph(
    ambient: PlaneEmbedding,
    anchor: Optional[Vertex] = None,
    vertices: Optional[FrozenSet[Vertex]] = None,
) -> NiceSubgraph:
    """Nice subgraph of H(G[vertices]) with respect to (outer face, anchor)."""

    keep = frozenset(ambient.rotation if vertices is None else vertices)
    if not keep:
        raise NiceSubgraphError("empty vertex set", invariant="input")
    builder = _Builder(ambient)
    if anchor is None:
        anchor = sort_vertices(FaceSystem(ambient, keep).outer.vertices)[0]
    try:
        system, edges = builder.build(keep, anchor)
    except EmbeddingError as exc:
        raise NiceSubgraphError(str(exc), invariant="face-lift") from exc
    nice = NiceSubgraph(system, frozenset(edges), anchor)
    check_nice(nice)
    log.debug("nice subgraph on %d vertices with %d of %d incidences", len(keep), len(edges), len(system.incidence().edges))
    return nice
