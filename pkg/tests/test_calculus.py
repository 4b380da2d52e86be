from __future__ import annotations

from itertools import product
from pathlib import Path

import pytest

from weakstar.calculus import (
    Certificate,
    CertificateFormatError,
    IllegalOperationError,
    Operation,
    OpState,
    PreconditionError,
    apply_op,
    certificate_split,
    decide_strict_degenerate,
    decide_strict_weak,
    decide_weak_star,
    dump_certificate,
    is_normal,
    lift_certificate,
    load_certificate,
    normalize_certificate,
    strict_certificate,
    strict_degeneracy,
    strict_weak_degeneracy,
    transfer_certificate,
    verify_certificate,
    weak_star_degeneracy,
)
from weakstar.calculus.degree import ConstructionFailure, degree_certificate
from weakstar.config import SolverSettings
from weakstar.graph import CapMap, Graph, connected_graphs
from weakstar.graph import families


def _k2() -> Graph:
    return Graph.from_edges(["x", "y"], [("x", "y")])


def _p3() -> Graph:
    return Graph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")])


def _k3() -> Graph:
    return Graph.from_edges(["x", "y", "z"], [("x", "y"), ("y", "z"), ("x", "z")])


def test_edge_delete_charges_the_payer() -> None:
    state = apply_op(OpState(_k2(), CapMap({"x": 5, "y": 2})), Operation.edge_delete("x", "y"))
    assert state.graph.m == 0
    assert state.caps.as_dict() == {"x": 3, "y": 2}


def test_vertex_delete_empties_k1() -> None:
    state = apply_op(OpState(Graph.from_edges(["v"], []), CapMap({"v": 1})), Operation.vertex_delete("v"))
    assert state.is_empty


def test_vertex_delete_decrements_neighbours() -> None:
    state = apply_op(OpState(_p3(), CapMap({"a": 2, "b": 1, "c": 2})), Operation.vertex_delete("b"))
    assert state.graph.m == 0
    assert state.caps.as_dict() == {"a": 1, "c": 1}


def test_delete_save_keeps_reference_cap() -> None:
    state = apply_op(OpState(_k3(), CapMap({"x": 3, "y": 2, "z": 2})), Operation.delete_save("x", "y"))
    assert state.caps.as_dict() == {"y": 2, "z": 1}


def test_vertex_delete_leaves_zero_caps_at_zero() -> None:
    state = apply_op(OpState(_p3(), CapMap({"a": 0, "b": 1, "c": 1})), Operation.vertex_delete("b"))
    assert state.caps.as_dict() == {"a": 0, "c": 0}
    with pytest.raises(IllegalOperationError, match="VertexDelete needs"):
        apply_op(state, Operation.vertex_delete("a"))


def test_illegal_operations_name_the_failed_precondition() -> None:
    start = OpState(_k2(), CapMap({"x": 2, "y": 2}))
    with pytest.raises(IllegalOperationError, match="EdgeDelete needs"):
        apply_op(start, Operation.edge_delete("x", "y"))
    with pytest.raises(IllegalOperationError, match="ReduceValue needs"):
        apply_op(start, Operation.reduce("x", 2))
    with pytest.raises(IllegalOperationError, match="unknown vertex"):
        apply_op(start, Operation.vertex_delete("q"))
    with pytest.raises(IllegalOperationError, match="missing edge"):
        apply_op(OpState(_p3(), CapMap({"a": 3, "b": 1, "c": 1})), Operation.edge_delete("a", "c"))
    with pytest.raises(ValueError):
        Operation.reduce("x", 0)
    with pytest.raises(ValueError):
        Operation.edge_delete("x", "x")


def test_verify_accepts_and_rejects_with_step() -> None:
    caps = {"a": 2, "b": 1, "c": 2}
    ops = [Operation.vertex_delete(v) for v in "bac"]
    assert verify_certificate(_p3(), caps, ops).accepted

    triangle = verify_certificate(_k3(), {"x": 2, "y": 2, "z": 2}, [Operation.vertex_delete(v) for v in "xyz"])
    assert not triangle.accepted
    assert triangle.step == 3

    edge = verify_certificate(_k2(), {"x": 2, "y": 2}, [Operation.edge_delete("x", "y")])
    assert (edge.accepted, edge.step) == (False, 1)


def test_full_mode_rejects_leftover_vertices_but_prefix_accepts() -> None:
    ops = [Operation.vertex_delete("b")]
    caps = {"a": 2, "b": 1, "c": 2}
    full = verify_certificate(_p3(), caps, ops)
    assert not full.accepted
    assert full.step == 2
    assert verify_certificate(_p3(), caps, ops, "prefix").accepted


def test_header_mismatch_is_rejected_at_step_zero() -> None:
    cert = Certificate.build(_p3(), {"a": 2, "b": 1, "c": 2}, [Operation.vertex_delete(v) for v in "bac"])
    result = verify_certificate(_p3(), {"a": 3, "b": 1, "c": 2}, cert)
    assert (result.accepted, result.step) == (False, 0)


def test_certificate_jsonl_roundtrip(tmp_path: Path) -> None:
    outcome = decide_weak_star(families.cycle(4), CapMap.constant(families.cycle(4), 3))
    assert outcome.certificate is not None
    path = tmp_path / "c4.jsonl"
    dump_certificate(path, outcome.certificate)
    loaded = load_certificate(path)
    assert loaded == outcome.certificate
    first = path.read_text(encoding="utf-8").splitlines()[0]
    assert '"graph"' in first and '"caps"' in first


def test_named_vertices_survive_the_graph6_header(tmp_path: Path) -> None:
    cert = Certificate.build(_p3(), {"a": 2, "b": 1, "c": 2}, [Operation.vertex_delete(v) for v in "bac"])
    path = tmp_path / "p3.jsonl"
    dump_certificate(path, cert)
    assert load_certificate(path).graph == _p3()


def test_malformed_certificate_files(tmp_path: Path) -> None:
    with pytest.raises(CertificateFormatError):
        load_certificate(tmp_path / "missing.jsonl")
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"graph": "Bw"}\n', encoding="utf-8")
    with pytest.raises(CertificateFormatError):
        load_certificate(bad)
    ops = tmp_path / "ops.jsonl"
    ops.write_text('{"graph": "@", "caps": {"0": 1}}\n{"op": "fly", "x": "0"}\n', encoding="utf-8")
    with pytest.raises(CertificateFormatError):
        load_certificate(ops)


def test_decide_weak_star_small_cases() -> None:
    empty = decide_weak_star(Graph.empty(), {})
    assert empty.is_yes and empty.certificate is not None and not empty.certificate.ops
    triangle = families.complete(3)
    assert decide_weak_star(triangle, CapMap.constant(triangle, 2)).status == "no"
    yes = decide_weak_star(triangle, CapMap.constant(triangle, 3))
    assert yes.is_yes
    assert verify_certificate(triangle, CapMap.constant(triangle, 3), yes.certificate).accepted


def test_decide_strict_weak_small_cases() -> None:
    triangle = families.complete(3)
    c4 = families.cycle(4)
    assert decide_strict_weak(triangle, CapMap.constant(triangle, 3)).is_yes
    assert decide_strict_weak(triangle, CapMap.constant(triangle, 2)).status == "no"
    assert decide_strict_weak(c4, CapMap.constant(c4, 2)).status == "no"
    certificate = decide_strict_weak(c4, CapMap.constant(c4, 3)).certificate
    assert certificate is not None
    assert {op.kind for op in certificate.ops} <= {"vdel", "deletesave"}


def test_budget_exhaustion_is_unknown_not_no() -> None:
    graph = families.complete(4)
    outcome = decide_weak_star(graph, CapMap.constant(graph, 3), SolverSettings(node_budget=1))
    assert outcome.status == "unknown"


def test_weak_star_degeneracy_spot_values() -> None:
    for n in range(1, 5):
        assert weak_star_degeneracy(families.complete(n)) == n
    assert weak_star_degeneracy(families.cycle(4)) == 3
    assert weak_star_degeneracy(families.cycle(5)) == 3
    assert strict_weak_degeneracy(families.cycle(4)) == 3
    with pytest.raises(ValueError):
        weak_star_degeneracy(Graph.empty())


def test_strict_degeneracy() -> None:
    k4 = families.complete(4)
    assert decide_strict_degenerate(k4, CapMap.constant(k4, 4)).degenerate
    c4 = families.cycle(4)
    stuck = decide_strict_degenerate(c4, CapMap.constant(c4, 2))
    assert stuck.outcome == "no" and len(stuck.stuck) == 4
    assert not decide_strict_degenerate(_p3(), {"a": 1, "b": 2, "c": 1}).degenerate
    assert strict_degeneracy(families.octahedron()) == 5

    ok = decide_strict_degenerate(c4, CapMap.constant(c4, 3))
    indegree = {v: 0 for v in c4.vertices}
    for _, head in ok.orientation(c4):
        indegree[head] += 1
    assert all(indegree[v] < 3 for v in c4.vertices)
    assert verify_certificate(c4, CapMap.constant(c4, 3), strict_certificate(c4, CapMap.constant(c4, 3))).accepted


def test_hierarchy_on_small_graphs() -> None:
    for graph in connected_graphs(3) + connected_graphs(4):
        for values in product(range(1, 4), repeat=graph.n):
            caps = dict(zip(graph.vertices, values))
            strict = decide_strict_degenerate(graph, caps).degenerate
            strict_weak = decide_strict_weak(graph, caps).is_yes
            weak = decide_weak_star(graph, caps).is_yes
            assert not strict or strict_weak
            assert not strict_weak or weak
            if weak:
                assert all(v > 0 for v in values)


def test_normalised_search_matches_unrestricted_search() -> None:
    for graph in connected_graphs(3):
        for values in product(range(1, 4), repeat=graph.n):
            caps = dict(zip(graph.vertices, values))
            fast = decide_weak_star(graph, caps).status
            slow = decide_weak_star(graph, caps, normalized=False).status
            assert fast == slow


def test_monotone_in_caps() -> None:
    graph = families.cycle(4)
    base = CapMap.constant(graph, 3)
    assert decide_weak_star(graph, base).is_yes
    bigger = base.with_value("0", 5)
    assert decide_weak_star(graph, bigger).is_yes
    lifted = lift_certificate(graph, base, bigger, decide_weak_star(graph, base).certificate.ops)
    assert verify_certificate(graph, bigger, lifted).accepted


def test_normalize_drops_cosmetic_reductions() -> None:
    k1 = Graph.from_edges(["v"], [])
    ops = [Operation.reduce("v", 2), Operation.vertex_delete("v")]
    assert not is_normal(ops)
    assert normalize_certificate(k1, {"v": 3}, ops) == [Operation.vertex_delete("v")]
    already = [Operation.vertex_delete("v")]
    assert normalize_certificate(k1, {"v": 3}, already) == already


def test_normalize_keeps_every_search_certificate_valid() -> None:
    for graph in connected_graphs(4):
        caps = CapMap.constant(graph, 3)
        outcome = decide_weak_star(graph, caps)
        if not outcome.is_yes:
            continue
        ops = normalize_certificate(graph, caps, outcome.certificate.ops)
        assert is_normal(ops)
        assert verify_certificate(graph, caps, ops).accepted


def test_certificate_split_trivial_cases() -> None:
    graph = families.cycle(4)
    caps = CapMap.constant(graph, 3)
    ops = decide_weak_star(graph, caps).certificate.ops
    everything = certificate_split(graph, caps, caps, ops)
    assert everything.x_set == frozenset(graph.vertices)
    assert not everything.cert_rest.ops
    nothing = certificate_split(graph, caps, CapMap.constant(graph, 0), ops)
    assert nothing.x_set == frozenset()
    assert list(nothing.cert_rest.ops) == list(ops)


def test_certificate_split_outputs_verify() -> None:
    graph = families.cycle(4)
    caps = CapMap.constant(graph, 3)
    ops = decide_weak_star(graph, caps).certificate.ops
    result = certificate_split(graph, caps, CapMap.constant(graph, 1), ops)
    for cert in (result.cert_x, result.cert_rest):
        assert verify_certificate(cert.graph, cert.caps, cert).accepted
    assert set(result.cert_x.graph.vertices) == set(result.x_set)
    assert set(result.cert_rest.graph.vertices) == set(graph.vertices) - result.x_set


def test_certificate_split_preconditions() -> None:
    graph = families.cycle(4)
    caps = CapMap.constant(graph, 3)
    ops = decide_weak_star(graph, caps).certificate.ops
    with pytest.raises(PreconditionError):
        certificate_split(graph, caps, CapMap.constant(graph, 4), ops)
    with pytest.raises(PreconditionError):
        certificate_split(graph, caps, CapMap.constant(graph, 1), ops[:1])


def test_degree_certificate_on_non_gdp_tree() -> None:
    graph = families.diamond()
    cert = degree_certificate(graph)
    assert verify_certificate(graph, CapMap.degree(graph), cert).accepted
    strict_weak = degree_certificate(graph, strict_weak=True)
    assert {op.kind for op in strict_weak.ops} <= {"vdel", "deletesave"}
    assert verify_certificate(graph, CapMap.degree(graph), strict_weak).accepted


def test_degree_certificate_rejects_gdp_tree() -> None:
    with pytest.raises(ConstructionFailure):
        degree_certificate(families.cycle(4))


def test_transfer_to_spanning_subgraph() -> None:
    wheel = families.wheel(5)
    caps = CapMap.constant(wheel, 4)
    outcome = decide_weak_star(wheel, caps)
    assert outcome.is_yes
    rim_only = wheel.remove_edges([("0", "1")])
    cert = transfer_certificate(wheel, caps, outcome.certificate.ops, rim_only)
    assert verify_certificate(rim_only, caps, cert).accepted
    with pytest.raises(PreconditionError):
        transfer_certificate(wheel, caps, outcome.certificate.ops, wheel.remove_vertices(["0"]))
