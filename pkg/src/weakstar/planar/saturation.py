from __future__ import annotations

"""Visibility saturation: any two high-degree vertices sharing a face become adjacent."""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

from ..graph.core import Edge, Graph, Vertex, edge_key, sort_vertices
from ..utils import get_logger
from .embedding import EmbeddingError, PlaneEmbedding, embedding_for

log = get_logger(__name__)


@dataclass(frozen=True)
class SaturationResult:
    graph: Graph
    embedding: PlaneEmbedding
    high: FrozenSet[Vertex]
    added: Tuple[Edge, ...]


def _next_chord(embedding: PlaneEmbedding, high: FrozenSet[Vertex]) -> Optional[Tuple[Vertex, Vertex, int]]:
    for index, face in enumerate(embedding.faces):
        on_face = sort_vertices(face.vertices & high)
        for a, b in combinations(on_face, 2):
            if b not in embedding.rotation[a]:
                return a, b, index
    return None


def saturate_visibility(
    graph: Graph, embedding: Optional[PlaneEmbedding] = None, threshold: int = 16
) -> SaturationResult:
    """Add chords between non-adjacent vertices of degree >= threshold on a common face."""

    embedding = embedding_for(graph, embedding)
    high = frozenset(v for v in graph.vertices if graph.degree(v) >= threshold)
    added: List[Edge] = []
    while True:
        chord = _next_chord(embedding, high)
        if chord is None:
            break
        a, b, face = chord
        try:
            embedding = embedding.with_chord(a, b, face)
        except EmbeddingError as exc:
            raise EmbeddingError(f"chord {a}-{b} breaks the embedding: {exc}") from exc
        added.append(edge_key(a, b))
    if added:
        log.info("visibility saturation added %d chord(s): %s", len(added), added)
    return SaturationResult(embedding.graph, embedding, high, tuple(added))
