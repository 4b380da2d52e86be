from __future__ import annotations

"""Exact vertex-connectivity checks."""

from itertools import combinations
from typing import Optional, Protocol

import networkx as nx
from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    local_node_connectivity,
)
from networkx.algorithms.flow import build_residual_network

from .core import Graph, vertex_key

EXHAUSTIVE_LIMIT = 200


class _FaceCriterion(Protocol):
    def face_pair_three_connected(self) -> bool:  # pragma: no cover - protocol
        ...


def _biconnected(nxg: nx.Graph) -> bool:
    return nxg.number_of_nodes() >= 3 and nx.is_biconnected(nxg)


def _flow_check(graph: Graph, k: int) -> bool:
    """Esfahanian-Hakimi style check with local connectivity cut off at k."""

    nxg = graph.to_networkx()
    aux = build_auxiliary_node_connectivity(nxg)
    residual = build_residual_network(aux, "capacity")
    source = min(graph.vertices, key=lambda v: (graph.degree(v), vertex_key(v)))
    if graph.degree(source) < k:
        return False

    def local(a: str, b: str) -> int:
        return local_node_connectivity(nxg, a, b, auxiliary=aux, residual=residual, cutoff=k)

    nbrs = graph.neighbours(source)
    for target in graph.vertices:
        if target == source or target in nbrs:
            continue
        if local(source, target) < k:
            return False
    for a, b in combinations(sorted(nbrs, key=vertex_key), 2):
        if not graph.has_edge(a, b) and local(a, b) < k:
            return False
    return True


def vertex_connectivity_at_least(graph: Graph, k: int) -> bool:
    """True iff ``graph`` has more than k vertices and no separating set of size < k."""

    if k <= 0:
        return True
    if graph.n <= k:
        return False
    if k == 1:
        return graph.is_connected()
    nxg = graph.to_networkx()
    if not _biconnected(nxg):
        return False
    if k == 2:
        return True
    if graph.n <= EXHAUSTIVE_LIMIT:
        for removed in combinations(graph.vertices, k - 2):
            rest = nxg.copy()
            rest.remove_nodes_from(removed)
            if not _biconnected(rest):
                return False
        return True
    return _flow_check(graph, k)


def is_three_connected(graph: Graph, embedding: Optional[_FaceCriterion] = None) -> bool:
    """3-connectivity; with a plane embedding the face-pair criterion is used."""

    if embedding is not None and graph.n > 3:
        if not _biconnected(graph.to_networkx()):
            return False
        return embedding.face_pair_three_connected()
    return vertex_connectivity_at_least(graph, 3)
