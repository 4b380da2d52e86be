from __future__ import annotations

"""Plane embeddings, nice subgraphs and the constructive truncated-degree procedures."""

from .corpus import CORPUS_NAMES, LARGE_NAMES, CorpusEntry, corpus_entry, planar_corpus
from .embedding import EmbeddingError, Face, PlaneEmbedding, compute_faces, embedding_for
from .faces import FaceSystem, IncidenceGraph, SubFace, incidence_graph
from .general import MinorParams, general_certificate
from .ledger import ClaimLedger, ClaimRound
from .nice import NiceSubgraph, NiceSubgraphError, check_nice, nice_subgraph
from .planar_certificate import (
    DEFAULT_THRESHOLD,
    LowComponent,
    PlanarResult,
    SplitContext,
    build_split_context,
    planar_certificate,
)
from .saturation import SaturationResult, saturate_visibility

__all__ = [
    "CORPUS_NAMES",
    "ClaimLedger",
    "LARGE_NAMES",
    "ClaimRound",
    "CorpusEntry",
    "DEFAULT_THRESHOLD",
    "EmbeddingError",
    "Face",
    "FaceSystem",
    "IncidenceGraph",
    "LowComponent",
    "MinorParams",
    "NiceSubgraph",
    "NiceSubgraphError",
    "PlanarResult",
    "PlaneEmbedding",
    "SaturationResult",
    "SplitContext",
    "SubFace",
    "build_split_context",
    "check_nice",
    "compute_faces",
    "corpus_entry",
    "embedding_for",
    "general_certificate",
    "incidence_graph",
    "nice_subgraph",
    "planar_certificate",
    "planar_corpus",
    "saturate_visibility",
]
