from __future__ import annotations

import pytest
from pydantic import ValidationError

from weakstar.calculus import ConstructionFailure, PreconditionError, verify_certificate
from weakstar.graph import CapMap
from weakstar.graph import families
from weakstar.planar import (
    CORPUS_NAMES,
    LARGE_NAMES,
    ClaimLedger,
    EmbeddingError,
    MinorParams,
    PlaneEmbedding,
    compute_faces,
    corpus_entry,
    general_certificate,
    incidence_graph,
    nice_subgraph,
    planar_certificate,
    planar_corpus,
    saturate_visibility,
)


def test_face_counts_follow_euler() -> None:
    assert len(compute_faces(PlaneEmbedding.from_graph(families.complete(4)))) == 4
    assert len(compute_faces(PlaneEmbedding.from_graph(families.cycle(4)))) == 2
    assert len(compute_faces(PlaneEmbedding.from_graph(families.path(4)))) == 1
    octahedron = families.octahedron()
    faces = compute_faces(PlaneEmbedding.from_graph(octahedron))
    assert len(faces) == 8
    assert all(face.size == 3 for face in faces)


def test_embedding_json_roundtrip_and_non_planar_input() -> None:
    embedding = PlaneEmbedding.from_graph(families.wheel(5))
    again = PlaneEmbedding.from_json(embedding.to_json())
    assert again.graph == embedding.graph
    assert len(again.faces) == len(embedding.faces)
    with pytest.raises(EmbeddingError):
        PlaneEmbedding.from_graph(families.complete(5))
    with pytest.raises(EmbeddingError):
        PlaneEmbedding.from_json({"rotation": {"0": ["1"], "1": []}})


def test_incidence_degrees_on_k4() -> None:
    incidence = incidence_graph(PlaneEmbedding.from_graph(families.complete(4)))
    assert len(incidence.faces) == 4
    assert all(incidence.degree_of_vertex(v) == 3 for v in "0123")
    assert all(incidence.degree_of_face(f) == 3 for f in incidence.faces)


def test_nice_subgraph_of_a_cycle() -> None:
    embedding = PlaneEmbedding.from_graph(families.cycle(5))
    nice = nice_subgraph(embedding)
    assert nice.faces_of(nice.anchor) == [nice.system.outer_key]
    assert all(len(nice.faces_of(v)) <= 2 for v in embedding.graph.vertices)
    assert nice.vertices_of(nice.system.outer_key) == frozenset(embedding.graph.vertices)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_nice_subgraph_on_corpus(name: str) -> None:
    entry = corpus_entry(name)
    nice = nice_subgraph(entry.embedding)
    outer = nice.system.outer
    assert nice.vertices_of(outer.key) == outer.vertices
    for face in nice.system.finite_faces():
        assert len(face.vertices - nice.vertices_of(face.key)) <= 2


def test_nice_subgraph_when_every_interior_vertex_leaves_a_cut_vertex() -> None:
    # square 0-1-2-3 with the path 0-4-5-2 drawn inside it
    rotation = {
        "0": ["1", "4", "3"],
        "1": ["0", "2"],
        "2": ["3", "5", "1"],
        "3": ["0", "2"],
        "4": ["0", "5"],
        "5": ["4", "2"],
    }
    drawn = PlaneEmbedding(rotation)
    outer = next(i for i, face in enumerate(drawn.faces) if face.vertices == frozenset("0123"))
    nice = nice_subgraph(PlaneEmbedding(rotation, outer))
    assert nice.anchor == "0"
    assert nice.faces_of("0") == [nice.system.outer_key]
    assert len(nice.faces_of("4")) == 2
    for face in nice.system.finite_faces():
        assert len(face.vertices - nice.vertices_of(face.key)) <= 2


def test_saturation_joins_twin_hubs() -> None:
    graph = families.twin_hub_wheel(32)
    result = saturate_visibility(graph, threshold=16)
    assert result.added == (("h1", "h2"),)
    assert result.graph.has_edge("h1", "h2")
    assert {"h1", "h2"} <= result.high
    assert saturate_visibility(families.wheel(20), threshold=16).added == ()


def test_planar_certificate_on_a_large_wheel() -> None:
    entry = corpus_entry("wheel_20")
    result = planar_certificate(entry.graph, entry.embedding)
    assert result.route == "claim"
    assert result.ledger is not None and result.ledger.ok
    assert result.ledger.max_edge_delete_cost() <= 5
    caps = CapMap.truncated(entry.graph, 16)
    assert verify_certificate(entry.graph, caps, result.certificate).accepted
    payload = result.to_dict()
    assert payload["ledger_ok"] is True


def test_planar_certificate_routes() -> None:
    octahedron = families.octahedron()
    assert planar_certificate(octahedron).route == "degree"
    with pytest.raises(ConstructionFailure):
        planar_certificate(octahedron, k=3)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_every_corpus_certificate_verifies(name: str) -> None:
    entry = corpus_entry(name)
    result = planar_certificate(entry.graph, entry.embedding)
    caps = CapMap.truncated(entry.graph, 16)
    assert verify_certificate(entry.graph, caps, result.certificate).accepted
    if result.ledger is not None:
        assert result.ledger.ok


def test_planar_certificate_preconditions() -> None:
    with pytest.raises(PreconditionError):
        planar_certificate(families.complete(4))
    with pytest.raises(PreconditionError):
        planar_certificate(families.cycle(6))


def test_unknown_corpus_name() -> None:
    with pytest.raises(KeyError):
        corpus_entry("tetrahedron_99")


def test_minor_params_constants() -> None:
    params = MinorParams(s=3, t=3)
    assert params.peel_bound == 13824
    assert params.block_bound == 5
    assert params.q == 69121
    assert params.k == 6635616
    with pytest.raises(ValidationError):
        MinorParams(s=0, t=3)


@pytest.mark.parametrize("name", ["octahedron", "wheel_20", "twin_hub_wheel_32"])
def test_general_certificate_degree_route(name: str) -> None:
    entry = corpus_entry(name)
    result = general_certificate(entry.graph, MinorParams(s=3, t=3))
    assert result.route == "degree"
    caps = CapMap.truncated(entry.graph, MinorParams(s=3, t=3).k)
    assert verify_certificate(entry.graph, caps, result.certificate).accepted


def test_general_certificate_preconditions() -> None:
    c5 = families.cycle(5)
    with pytest.raises(PreconditionError):
        general_certificate(c5, MinorParams(s=3, t=3))
    with pytest.raises(PreconditionError):
        general_certificate(c5, MinorParams(s=2, t=3))
    diamond = families.diamond()
    assert general_certificate(diamond, MinorParams(s=2, t=2)).route == "degree"


@pytest.mark.parametrize("name", LARGE_NAMES)
def test_large_corpus_certificates_verify(name: str) -> None:
    entry = corpus_entry(name)
    result = planar_certificate(entry.graph, entry.embedding)
    assert result.route == "claim"
    assert result.ledger is not None and result.ledger.ok
    assert verify_certificate(entry.graph, CapMap.truncated(entry.graph, 16), result.certificate).accepted


def test_planar_corpus_lists_every_entry() -> None:
    entries = planar_corpus()
    assert [entry.name for entry in entries] == list(CORPUS_NAMES)


def test_general_certificate_minor_route() -> None:
    graph = families.twin_hub_wheel(140)
    params = MinorParams(s=1, t=1)
    result = general_certificate(graph, params)
    assert result.route == "minor"
    assert result.context["v2"] == 1
    assert result.context["order"] == ["o"]
    assert result.ledger is not None and result.ledger.ok
    caps = CapMap.truncated(graph, params.k)
    assert verify_certificate(graph, caps, result.certificate).accepted


def test_general_certificate_reports_the_edge_cost_bound() -> None:
    ledger = ClaimLedger()
    with pytest.raises(ConstructionFailure) as failure:
        general_certificate(families.wheel(140), MinorParams(s=1, t=1), ledger=ledger)
    assert failure.value.invariant == "edge-cost-bound"
    assert not ledger.ok
