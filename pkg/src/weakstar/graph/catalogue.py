from __future__ import annotations

"""Catalogue of small graphs up to isomorphism.

Graphs on n vertices are produced from all graphs on n - 1 vertices by adding
a vertex with every possible neighbourhood; duplicates are rejected through
canonical keys. Representatives are relabelled canonically to "0".."n-1".
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from .canonical import canonical_form
from .core import Graph
from ..utils import get_logger

log = get_logger(__name__)

MAX_CATALOGUE_N = 8


def _canonical_representative(graph: Graph) -> Tuple[Tuple, Graph]:
    form = canonical_form(graph)
    mapping = {v: str(i) for i, v in enumerate(form.labelling)}
    return form.key, graph.relabel(mapping)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Graph, ...]:
    """Every graph on n vertices (connected or not), one per isomorphism class."""

    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_CATALOGUE_N:
        raise ValueError(f"catalogue enumeration is limited to n <= {MAX_CATALOGUE_N}")
    if n == 0:
        return (Graph.empty(),)
    found: Dict[Tuple, Graph] = {}
    new_vertex = str(n - 1)
    for base in all_graphs(n - 1):
        old = list(base.vertices)
        for size in range(len(old) + 1):
            for nbrs in combinations(old, size):
                adj = {v: set(base.neighbours(v)) for v in old}
                adj[new_vertex] = set(nbrs)
                for u in nbrs:
                    adj[u].add(new_vertex)
                key, rep = _canonical_representative(Graph(adj))
                found.setdefault(key, rep)
    ordered = sorted(found.items(), key=lambda item: (item[1].m, item[0]))
    log.debug("catalogue n=%d: %d graphs", n, len(ordered))
    return tuple(graph for _, graph in ordered)


def connected_graphs(n: int) -> List[Graph]:
    """Connected graphs on n vertices up to isomorphism (1, 1, 2, 6, 21, 112 for n = 1..6)."""

    if n == 0:
        return []
    return [g for g in all_graphs(n) if g.is_connected()]


def connected_graphs_up_to(max_n: int) -> List[Graph]:
    result: List[Graph] = []
    for n in range(1, max_n + 1):
        result.extend(connected_graphs(n))
    return result
